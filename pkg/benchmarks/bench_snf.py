"""Compare the compiled and pure-Python Smith normal form kernels.

    python benchmarks/bench_snf.py [--repeat 3]

Matrices are boundary maps of Tonnetz complexes with lengths (1,2,4,...).
"""
from __future__ import annotations

import argparse
import time

from tonnetz import _snf, kernels
from tonnetz.core import build_complex, length_vector
from tonnetz.topology import boundary_matrix

CASES = [(1, 2, 4, 8), (1, 2, 4, 8, 16), (1, 2, 3, 7, 13)]


def best_of(fn, matrix, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(matrix)
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"compiled backend: {kernels.BACKEND}")
    print(f"{'complex':<28}{'d':>3}{'shape':>14}{'compiled s':>12}{'python s':>11}{'speedup':>9}")
    for lengths in CASES:
        L = length_vector(*lengths)
        if not L.generic:
            continue
        T = build_complex(L)
        for d in range(1, T.dimension + 1):
            m = boundary_matrix(sorted(T.faces(d - 1)), sorted(T.faces(d)))
            fast = best_of(kernels.smith_diagonal, m, args.repeat)
            slow = best_of(_snf.smith_diagonal, m, args.repeat)
            assert kernels.smith_diagonal(m) == _snf.smith_diagonal(m)
            shape = f"{len(m)}x{len(m[0])}"
            print(f"Tonn^{L.n},{L.k}{L}".ljust(28) + f"{d:>3}{shape:>14}{fast:>12.4f}{slow:>11.4f}{slow / fast:>9.1f}")


if __name__ == "__main__":
    main()

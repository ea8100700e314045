"""Pure-Python Smith normal form kernel (sparse rows, exact ints).

This is the reference implementation and the fallback when the compiled
``_snf_ext`` module is unavailable or overflows its 64-bit range.
"""
from __future__ import annotations

from math import gcd
from typing import Sequence


def invariant_factors(diagonal: list[int]) -> list[int]:
    """Turn an arbitrary nonzero diagonal into the divisibility chain."""
    rest = sorted(abs(d) for d in diagonal if abs(d) != 1)
    ones = len(diagonal) - len(rest)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return [1] * ones + sorted(rest)


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Pivots are chosen with the smallest magnitude available (a unit pivot
    ends the search early), which keeps entry growth in check on boundary
    matrices.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(matrix):
        entries = {j: v for j, v in enumerate(row) if v}
        if entries:
            rows[i] = entries
            for j in entries:
                cols.setdefault(j, set()).add(i)

    def setval(i: int, j: int, v: int) -> None:
        if v:
            rows[i][j] = v
            cols.setdefault(j, set()).add(i)
        else:
            rows[i].pop(j, None)
            s = cols.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del cols[j]

    diagonal: list[int] = []
    while rows:
        best = None
        for i, entries in rows.items():
            for j, v in entries.items():
                if best is None or abs(v) < abs(best[2]):
                    best = (i, j, v)
                    if abs(v) == 1:
                        break
            if best is not None and abs(best[2]) == 1:
                break
        pi, pj, _ = best
        while True:
            p = rows[pi][pj]
            moved = False
            # clear the pivot column with row operations
            for r in list(cols[pj]):
                if r == pi:
                    continue
                q = rows[r][pj] // p
                prow = rows[pi]
                target = rows[r]
                for c, v in prow.items():
                    setval(r, c, target.get(c, 0) - q * v)
                if rows[r].get(pj):
                    pi, moved = r, True
                    break
            if moved:
                continue
            # the column is clear, so column operations only touch row pi
            for c, v in list(rows[pi].items()):
                if c == pj:
                    continue
                rem = v % p
                setval(pi, c, rem)
                moved = moved or bool(rem)
            if moved:
                # restart on the smallest remainder in the pivot row
                pj = min((c for c in rows[pi]), key=lambda c: abs(rows[pi][c]))
                continue
            break
        diagonal.append(abs(rows[pi][pj]))
        setval(pi, pj, 0)
        del rows[pi]
        for r in [r for r, e in rows.items() if not e]:
            del rows[r]
    return invariant_factors(diagonal)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return len(smith_diagonal(matrix))

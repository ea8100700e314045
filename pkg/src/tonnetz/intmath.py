"""Exact integer linear algebra: Hermite normal form, kernels, determinants.

Everything here works on plain Python ``int`` lists so results are exact
for arbitrary sizes. Matrices are lists of rows.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Vector = list[int]
Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def hnf_rows(vectors: Iterable[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    The result is in echelon form with positive pivots and every entry above
    a pivot reduced into ``[0, pivot)``. Zero rows are dropped, so the output
    is a basis of the lattice and is unique for it.
    """
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    width = len(rows[0])
    r = 0
    for col in range(width):
        while True:
            live = [i for i in range(r, len(rows)) if rows[i][col]]
            if not live:
                break
            piv = min(live, key=lambda i: abs(rows[i][col]))
            prow = rows[piv]
            done = True
            for i in live:
                if i == piv:
                    continue
                q = rows[i][col] // prow[col]
                rows[i] = [a - q * b for a, b in zip(rows[i], prow)]
                if rows[i][col]:
                    done = False
            if done:
                break
        live = [i for i in range(r, len(rows)) if rows[i][col]]
        if not live:
            continue
        piv = live[0]
        rows[r], rows[piv] = rows[piv], rows[r]
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [row for row in rows[:r]]


def _pivot(row: Sequence[int]) -> int:
    return next(i for i, a in enumerate(row) if a)


def contains(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice with row-HNF basis ``hnf``."""
    v = list(v)
    start = 0
    for row in hnf:
        c = _pivot(row)
        if any(v[start:c]):
            return False
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
        start = c + 1
    return not any(v)


def reduce_mod(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of ``v`` modulo a full-rank square row-HNF."""
    v = list(v)
    for row in hnf:
        c = _pivot(row)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def kernel_basis(row: Sequence[int]) -> Matrix:
    """Basis (as rows) of the integer solutions ``x`` of ``row . x == 0``.

    Unimodular column operations bring ``row`` to ``(g, 0, ..., 0)``; the
    tracked transform's trailing columns span the kernel. The basis is
    returned in Hermite normal form.
    """
    k = len(row)
    vals = list(row)
    # columns of u as rows of ut
    ut = [[int(i == j) for j in range(k)] for i in range(k)]
    for j in range(1, k):
        if vals[j] == 0:
            continue
        x, y, g = xgcd(vals[0], vals[j])
        a, b = vals[0] // g, vals[j] // g
        c0 = [x * p + y * q for p, q in zip(ut[0], ut[j])]
        cj = [-b * p + a * q for p, q in zip(ut[0], ut[j])]
        ut[0], ut[j] = c0, cj
        vals[0], vals[j] = g, 0
    if vals[0] == 0:
        return hnf_rows(ut)
    return hnf_rows(ut[1:])


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]

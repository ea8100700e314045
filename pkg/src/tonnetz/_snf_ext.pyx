# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith normal form kernel on a dense int64 buffer.

Same contract as ``tonnetz._snf.smith_diagonal``. Raises ``OverflowError``
when an entry leaves the safe range; the caller then retries in pure Python.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset

from tonnetz._snf import invariant_factors

cdef long long LIMIT = 1LL << 31


cdef inline long long floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long llabs_(long long a) nogil:
    return -a if a < 0 else a


def smith_diagonal(matrix):
    cdef Py_ssize_t m = len(matrix)
    if m == 0:
        return []
    cdef Py_ssize_t n = len(matrix[0])
    if n == 0:
        return []
    cdef long long *a = <long long *> malloc(m * n * sizeof(long long))
    cdef Py_ssize_t *nz = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if a == NULL or nz == NULL:
        free(a)
        free(nz)
        raise MemoryError()
    cdef Py_ssize_t i, j, r, c, t, bi, bj, e, cnt
    cdef long long v, p, q, best, tmp
    cdef bint moved, zero, overflow = False
    cdef Py_ssize_t live = m
    diagonal = []
    try:
        for i in range(m):
            row = matrix[i]
            for j in range(n):
                v = row[j]
                if llabs_(v) >= LIMIT:
                    raise OverflowError("entry too large")
                a[i * n + j] = v
        t = 0
        while t < m and t < n:
            # pivot: smallest nonzero magnitude in the trailing block
            # rows found to be zero are parked beyond ``live`` and never rescanned
            best = 0
            bi = -1
            bj = -1
            i = t
            while i < live:
                zero = True
                for j in range(t, n):
                    v = llabs_(a[i * n + j])
                    if v != 0:
                        zero = False
                        if best == 0 or v < best:
                            best = v
                            bi = i
                            bj = j
                            if v == 1:
                                break
                if best == 1:
                    break
                if zero:
                    live -= 1
                    for j in range(t, n):
                        tmp = a[i * n + j]
                        a[i * n + j] = a[live * n + j]
                        a[live * n + j] = tmp
                    if bi == live:
                        bi = i
                    continue
                i += 1
            if best == 0:
                break
            while True:
                # move pivot to (t, t)
                if bi != t:
                    for j in range(n):
                        tmp = a[t * n + j]
                        a[t * n + j] = a[bi * n + j]
                        a[bi * n + j] = tmp
                if bj != t:
                    for i in range(live):
                        tmp = a[i * n + t]
                        a[i * n + t] = a[i * n + bj]
                        a[i * n + bj] = tmp
                p = a[t * n + t]
                moved = False
                # row updates only touch the pivot row's nonzero columns
                cnt = 0
                for c in range(t, n):
                    if a[t * n + c] != 0:
                        nz[cnt] = c
                        cnt += 1
                for r in range(t + 1, live):
                    v = a[r * n + t]
                    if v == 0:
                        continue
                    q = floordiv(v, p)
                    for e in range(cnt):
                        c = nz[e]
                        v = a[r * n + c] - q * a[t * n + c]
                        if llabs_(v) >= LIMIT:
                            overflow = True
                        a[r * n + c] = v
                    if overflow:
                        raise OverflowError("entry growth beyond int64 safety margin")
                    if a[r * n + t] != 0:
                        bi = r
                        bj = t
                        moved = True
                        break
                if moved:
                    continue
                best = 0
                for c in range(t + 1, n):
                    v = a[t * n + c]
                    if v == 0:
                        continue
                    v = v - floordiv(v, p) * p
                    a[t * n + c] = v
                    if v != 0 and (best == 0 or llabs_(v) < best):
                        best = llabs_(v)
                        bi = t
                        bj = c
                if best != 0:
                    continue
                break
            diagonal.append(llabs_(a[t * n + t]))
            t += 1
    finally:
        free(a)
        free(nz)
    return invariant_factors(diagonal)

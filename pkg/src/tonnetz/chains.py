"""Edge types, the cocycles theta_{i,j} and omega, and edge words.

An :class:`EdgeWord` records a based edge path by how many positive atomic
steps of each type it takes. Letter order is deliberately forgotten:
swapping adjacent atomic steps is a homotopy, so nothing downstream needs it.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from tonnetz import intmath
from tonnetz.core import LengthVector, TonnetzComplex
from tonnetz.errors import NoType, NotClosed, NotGeneric, TonnetzError


def a_vector(k: int, i: int) -> tuple[int, ...]:
    """Image of the type-``i`` atomic step: ``k-1`` at ``i``, ``-1`` elsewhere."""
    if not 1 <= i <= k:
        raise TonnetzError(f"index {i} outside 1..{k}")
    return tuple(k - 1 if j == i else -1 for j in range(1, k + 1))


def a_subset(k: int, subset: Iterable[int]) -> tuple[int, ...]:
    subset = set(subset)
    return tuple(k * (j in subset) - len(subset) for j in range(1, k + 1))


def _require_generic(L: LengthVector) -> None:
    if not L.generic:
        raise NotGeneric(f"{L} is not generic")


def edge_l_type(L: LengthVector, tail: int, head: int) -> frozenset[int]:
    """Index set whose lengths sum to the circular span from tail to head."""
    _require_generic(L)
    diff = (head - tail) % L.n
    part = L.decode(diff)
    if part is None:
        raise NoType(f"{tail}->{head} (span {diff}) is not an edge of Tonn{L}")
    return part


class Chain:
    """Integer 1-chain keyed by ``(u, v)`` with ``u < v``.

    Adding the edge ``v -> u`` stores ``-1`` on ``(u, v)``, so antisymmetry is
    built in.
    """

    __slots__ = ("coeffs",)

    def __init__(self, edges: Iterable[tuple[int, int, int]] = ()):
        self.coeffs: dict[tuple[int, int], int] = {}
        for tail, head, c in edges:
            self.add(tail, head, c)

    def add(self, tail: int, head: int, coeff: int = 1) -> "Chain":
        if tail == head:
            raise TonnetzError("degenerate edge")
        key, sign = ((tail, head), 1) if tail < head else ((head, tail), -1)
        val = self.coeffs.get(key, 0) + sign * coeff
        if val:
            self.coeffs[key] = val
        else:
            self.coeffs.pop(key, None)
        return self

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), c in sorted(self.coeffs.items()):
            yield u, v, c

    def boundary(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u, v, c in self.edges():
            out[v] = out.get(v, 0) + c
            out[u] = out.get(u, 0) - c
        return {x: c for x, c in out.items() if c}

    def __add__(self, other: "Chain") -> "Chain":
        res = Chain()
        res.coeffs = dict(self.coeffs)
        for u, v, c in other.edges():
            res.add(u, v, c)
        return res

    def __neg__(self) -> "Chain":
        res = Chain()
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, m: int) -> "Chain":
        res = Chain()
        if m:
            res.coeffs = {e: m * c for e, c in self.coeffs.items()}
        return res

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Chain({self.coeffs})"


@dataclass(frozen=True)
class EdgeWord:
    L: LengthVector
    base: int
    exponents: tuple[int, ...]

    @classmethod
    def from_letters(cls, L: LengthVector, base: int, letters: Iterable[int]) -> "EdgeWord":
        """``letters`` are signed 1-based types: ``+i`` is E_i, ``-i`` its inverse."""
        p = [0] * L.k
        for a in letters:
            if a == 0 or abs(a) > L.k:
                raise TonnetzError(f"bad letter {a}")
            p[abs(a) - 1] += 1 if a > 0 else -1
        return cls(L, base % L.n, tuple(p))

    @property
    def displacement(self) -> int:
        return sum(p * l for p, l in zip(self.exponents, self.L.lengths))

    @property
    def endpoint(self) -> int:
        return (self.base + self.displacement) % self.L.n

    @property
    def winding(self) -> int:
        """``p_0`` with ``sum p_i l_i = p_0 n + (endpoint - base)``."""
        return (self.base + self.displacement) // self.L.n

    @property
    def closed(self) -> bool:
        return self.displacement % self.L.n == 0

    def then(self, other: "EdgeWord") -> "EdgeWord":
        if other.base != self.endpoint:
            raise TonnetzError("words do not concatenate")
        return EdgeWord(self.L, self.base, tuple(a + b for a, b in zip(self.exponents, other.exponents)))


def atom_decomposition(L: LengthVector, tail: int, head: int) -> EdgeWord:
    """Positive atomic steps from ``tail`` to ``head``, one per index of the L-type."""
    part = edge_l_type(L, tail, head)
    return EdgeWord(L, tail % L.n, tuple(int(i in part) for i in range(1, L.k + 1)))


def edge_theta(L: LengthVector, i: int, j: int, tail: int, head: int) -> int:
    part = edge_l_type(L, tail, head)
    return (i in part) - (j in part)


Evaluable = Union[Chain, EdgeWord]


def theta(L: LengthVector, i: int, j: int, x: Evaluable) -> int:
    """The elementary cochain theta_{i,j} evaluated on a chain or edge word."""
    if i == j:
        raise TonnetzError("theta needs i != j")
    if isinstance(x, EdgeWord):
        return x.exponents[i - 1] - x.exponents[j - 1]
    return sum(c * edge_theta(L, i, j, u, v) for u, v, c in x.edges())


def omega(L: LengthVector, x: Evaluable) -> tuple[int, ...]:
    """Vector cocycle (omega_1, ..., omega_k) on a chain or edge word."""
    k = L.k
    total = [0] * k
    if isinstance(x, EdgeWord):
        for i, p in enumerate(x.exponents, start=1):
            if p:
                total = [t + p * a for t, a in zip(total, a_vector(k, i))]
        return tuple(total)
    for u, v, c in x.edges():
        img = a_subset(k, edge_l_type(L, u, v))
        total = [t + c * a for t, a in zip(total, img)]
    return tuple(total)


def omega_i(L: LengthVector, i: int, x: Evaluable) -> int:
    """Canonical cocycle omega_i as the sum of theta_{i,j} over j != i."""
    return sum(theta(L, i, j, x) for j in range(1, L.k + 1) if j != i)


def canonical_cycle(T: TonnetzComplex | LengthVector, i: int) -> Chain:
    """``c_i``: the sum of all n positive atomic edges of type ``i``."""
    L = T.L if isinstance(T, TonnetzComplex) else T
    step = L.lengths[i - 1]
    return Chain((x, (x + step) % L.n, 1) for x in range(L.n))


def atomic_loops(L: LengthVector, i: int) -> list[list[int]]:
    """The type-``i`` atomic edges concatenated into gcd(n, l_i) closed loops."""
    step = L.lengths[i - 1]
    seen: set[int] = set()
    loops = []
    for start in range(L.n):
        if start in seen:
            continue
        loop = []
        x = start
        while x not in seen:
            seen.add(x)
            loop.append(x)
            x = (x + step) % L.n
        loops.append(loop)
    return loops


def chain_exponents(L: LengthVector, chain: Chain) -> tuple[int, ...]:
    """Exponent vector of a 1-chain after replacing each edge by its atoms."""
    p = [0] * L.k
    for u, v, c in chain.edges():
        for i in edge_l_type(L, u, v):
            p[i - 1] += c
    return tuple(p)


def homology_normal_form(word: EdgeWord | Sequence[int], L: LengthVector | None = None) -> tuple[int, ...]:
    """Class representative of a closed word: exponents shifted so min is 0."""
    if isinstance(word, EdgeWord):
        if not word.closed:
            raise NotClosed(f"word from {word.base} ends at {word.endpoint}")
        p = word.exponents
    else:
        p = tuple(word)
        if L is not None and sum(a * l for a, l in zip(p, L.lengths)) % L.n:
            raise NotClosed(f"exponents {p} do not close up")
    m = min(p)
    return tuple(a - m for a in p)


def pairing_closed_form(n: int, k: int) -> list[list[int]]:
    return [[n * (k - 1) if i == j else -n for j in range(k - 1)] for i in range(k - 1)]


def direct_pairing(T: TonnetzComplex) -> list[list[int]]:
    """``<omega_i, c_j>`` for ``1 <= i, j <= k-1`` evaluated edge by edge."""
    L = T.L
    cycles = [canonical_cycle(L, j) for j in range(1, L.k)]
    return [[omega_i(L, i, c) for c in cycles] for i in range(1, L.k)]


def pairing_matrix(n: int, k: int, T: TonnetzComplex | None = None) -> tuple[list[list[int]], int]:
    """The (k-1)x(k-1) pairing matrix and its exact determinant.

    With a complex ``T`` the closed form is checked against direct evaluation.
    """
    if k < 2:
        raise TonnetzError("k must be at least 2")
    M = pairing_closed_form(n, k)
    if T is not None:
        direct = direct_pairing(T)
        if direct != M:
            raise AssertionError(f"pairing mismatch: direct {direct} vs closed form {M}")
    return M, intmath.det(M)

"""The permutohedral lattice, its Delone triangulation, and Tonnetz quotients.

Lattice points are handled in two coordinate systems:

* k-vectors: integer vectors summing to 0, all entries congruent mod k;
* a-coordinates: ``q`` of length ``k-1`` standing for ``q_1 a_1 + ... + q_{k-1} a_{k-1}``
  (``a_k`` is eliminated through ``a_1 + ... + a_k = 0``).

Sublattice bases are kept in column-style Hermite normal form: generators
are columns, the matrix is lower triangular with a positive diagonal, and
each off-diagonal entry is reduced modulo the diagonal entry of its row.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from tonnetz import intmath
from tonnetz.chains import a_subset, a_vector
from tonnetz.core import LengthVector, Simplex, SimplicialComplex, build_complex
from tonnetz.errors import LabelCollision, NotGeneric, NotReduced, TonnetzError

__all__ = [
    "AmbientLattice", "SubLattice", "DeloneCell", "QuotientComplex", "Systole",
    "IrrationalPatch", "a_vector", "a_subset", "delone_star", "lambda_L",
    "h1_lattice", "quotient_complex", "verify_main_theorem", "shortest_vector",
    "irrational_patch", "to_kvector", "from_kvector", "in_lambda", "label",
]


def to_kvector(q: Sequence[int]) -> tuple[int, ...]:
    """a-coordinates -> k-vector."""
    k = len(q) + 1
    s = sum(q)
    return tuple(k * a - s for a in q) + (-s,)


def from_kvector(w: Sequence[int]) -> tuple[int, ...]:
    """k-vector -> a-coordinates (inverse of :func:`to_kvector`)."""
    k = len(w)
    out = []
    for a in w[:-1]:
        d = a - w[-1]
        if d % k:
            raise TonnetzError(f"{tuple(w)} is not in the permutohedral lattice")
        out.append(d // k)
    return tuple(out)


def in_lambda(w: Sequence[int]) -> bool:
    k = len(w)
    return sum(w) == 0 and all((a - w[0]) % k == 0 for a in w)


def exponents_to_acoords(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - p[-1] for a in p[:-1])


def acoords_to_exponents(q: Sequence[int]) -> tuple[int, ...]:
    """Canonical exponent vector (minimum entry 0) of the point ``q``."""
    p = tuple(q) + (0,)
    m = min(p)
    return tuple(a - m for a in p)


def label(L: LengthVector, q: Sequence[int]) -> int:
    """Z_n label of a lattice point: ``sum p_i l_i mod n``."""
    return sum(a * l for a, l in zip(q, L.lengths)) % L.n


@dataclass(frozen=True)
class AmbientLattice:
    k: int

    @property
    def gram(self) -> list[list[int]]:
        k = self.k
        return [[k * (k - 1) if i == j else -k for j in range(k - 1)] for i in range(k - 1)]

    def norm(self, q: Sequence[int]) -> int:
        w = to_kvector(q)
        return sum(a * a for a in w)


@dataclass(frozen=True)
class SubLattice:
    k: int
    basis: tuple[tuple[int, ...], ...]  # column-style HNF, (k-1)x(k-1)

    @classmethod
    def from_generators(cls, k: int, gens: Iterable[Sequence[int]]) -> "SubLattice":
        rows = intmath.hnf_rows(gens)
        if len(rows) != k - 1:
            raise TonnetzError(f"generators span rank {len(rows)}, expected {k - 1}")
        return cls(k, tuple(map(tuple, intmath.transpose(rows))))

    @classmethod
    def full(cls, k: int) -> "SubLattice":
        return cls.from_generators(k, [[int(i == j) for j in range(k - 1)] for i in range(k - 1)])

    @property
    def ambient(self) -> AmbientLattice:
        return AmbientLattice(self.k)

    @property
    def rows(self) -> list[list[int]]:
        """Row-style HNF (generators as rows)."""
        return intmath.transpose(self.basis)

    @property
    def generators(self) -> list[tuple[int, ...]]:
        return [tuple(r) for r in self.rows]

    @property
    def index(self) -> int:
        idx = 1
        for i, row in enumerate(self.basis):
            idx *= row[i]
        return idx

    def __contains__(self, q: Sequence[int]) -> bool:
        return intmath.contains(self.rows, q)

    def reduce(self, q: Sequence[int]) -> tuple[int, ...]:
        return intmath.reduce_mod(self.rows, q)

    def gram(self) -> list[list[int]]:
        """Gram matrix of the HNF generators in the ambient metric."""
        G = self.ambient.gram
        B = [list(r) for r in self.basis]
        return intmath.matmul(intmath.transpose(B), intmath.matmul(G, B))

    def dumps(self) -> str:
        entries = [x for row in self.basis for x in row]
        return " ".join(map(str, ["lattice", self.k, self.index, *entries]))

    @classmethod
    def loads(cls, text: str) -> "SubLattice":
        toks = text.split()
        if toks[0] != "lattice":
            raise TonnetzError(f"not a lattice record: {toks[0]!r}")
        k, index = int(toks[1]), int(toks[2])
        vals = list(map(int, toks[3:]))
        m = k - 1
        basis = tuple(tuple(vals[i * m:(i + 1) * m]) for i in range(m))
        sub = cls(k, basis)
        if sub.index != index:
            raise TonnetzError("index field does not match the basis")
        return sub


@dataclass(frozen=True)
class DeloneCell:
    base: tuple[int, ...]  # k-vector
    chain: tuple[frozenset[int], ...]  # I_1 < ... < I_{k-1}

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        k = len(self.base)
        out = [self.base]
        for part in self.chain:
            out.append(tuple(z + a for z, a in zip(self.base, a_subset(k, part))))
        return tuple(out)


def delone_star(k: int, z: Sequence[int] | None = None) -> list[DeloneCell]:
    """The ``k!`` maximal Delone cells containing the lattice point ``z``."""
    z = tuple(z) if z is not None else (0,) * k
    if not in_lambda(z):
        raise TonnetzError(f"{z} is not in the permutohedral lattice")
    cells = []
    for perm in itertools.permutations(range(1, k + 1)):
        chain = tuple(frozenset(perm[:j]) for j in range(1, k))
        cells.append(DeloneCell(z, chain))
    return cells


def _require(L: LengthVector) -> None:
    if not L.generic:
        raise NotGeneric(f"{L} is not generic")
    if not L.reduced:
        raise NotReduced(f"{L} is not reduced (gcd {L.divisor})")


def lambda_L(L: LengthVector) -> SubLattice:
    """Image of ``{p : sum p_i l_i = 0 mod n}`` under ``p -> sum p_i a_i``."""
    _require(L)
    solutions = intmath.kernel_basis(list(L.lengths) + [-L.n])
    gens = [exponents_to_acoords(s[:-1]) for s in solutions]
    return SubLattice.from_generators(L.k, gens)


def h1_lattice(L: LengthVector) -> list[list[int]]:
    """HNF basis of the integer vectors orthogonal to ``L`` (rank k-1)."""
    _require(L)
    basis = intmath.kernel_basis(L.lengths)
    if len(basis) != L.k - 1:
        raise TonnetzError("kernel rank is not k-1")
    return basis


def _steps(k: int) -> list[tuple[int, ...]]:
    steps = [tuple(int(i == j) for j in range(k - 1)) for i in range(k - 1)]
    steps.append((-1,) * (k - 1))  # a_k
    return steps


def coset_representatives(L: LengthVector, sub: SubLattice) -> dict[int, tuple[int, ...]]:
    """Breadth-first from 0 along atomic steps until every label is seen.

    Two points with one label must differ by an element of ``sub``; otherwise
    the label map is not a bijection and :class:`LabelCollision` is raised.
    """
    start = (0,) * (L.k - 1)
    reps = {0: start}
    seen = {start}
    queue = deque([start])
    steps = _steps(L.k)
    while queue and len(reps) < L.n:
        q = queue.popleft()
        for s in steps:
            nxt = tuple(a + b for a, b in zip(q, s))
            if nxt in seen:
                continue
            seen.add(nxt)
            lab = label(L, nxt)
            if lab in reps:
                diff = tuple(a - b for a, b in zip(nxt, reps[lab]))
                if diff not in sub:
                    raise LabelCollision(f"{nxt} and {reps[lab]} share label {lab}")
            else:
                reps[lab] = nxt
            queue.append(nxt)
    if len(reps) != L.n or sub.index != L.n:
        raise LabelCollision(f"found {len(reps)} labels for index {sub.index}, n={L.n}")
    return dict(sorted(reps.items()))


@dataclass
class QuotientComplex:
    L: LengthVector
    sublattice: SubLattice
    representatives: dict[int, tuple[int, ...]]
    cells: frozenset[frozenset[tuple[int, ...]]]
    facets: frozenset[Simplex]

    @property
    def vertex_classes(self) -> int:
        return len(self.representatives)

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.facets)


def quotient_complex(L: LengthVector) -> QuotientComplex:
    """Delone cells modulo Lambda_L, with vertices relabelled in Z_n."""
    _require(L)
    sub = lambda_L(L)
    reps = coset_representatives(L, sub)
    classes = {}
    for lab, q in reps.items():
        c = sub.reduce(q)
        if c in classes:
            raise LabelCollision(f"labels {classes[c]} and {lab} share a coset")
        classes[c] = lab
    cells = set()
    for q in reps.values():
        for cell in delone_star(L.k, to_kvector(q)):
            cells.add(frozenset(sub.reduce(from_kvector(v)) for v in cell.vertices))
    facets = set()
    for cell in cells:
        labs = tuple(sorted(classes[c] for c in cell))
        if len(set(labs)) != L.k:
            raise LabelCollision(f"cell {sorted(cell)} is degenerate in the quotient")
        facets.add(labs)
    if len(facets) != len(cells):
        raise LabelCollision("distinct cells share a label set")
    return QuotientComplex(L, sub, reps, frozenset(cells), frozenset(facets))


@dataclass
class MainTheoremResult:
    holds: bool
    quotient_facets: int
    complex_facets: int
    witness: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def verify_main_theorem(L: LengthVector) -> MainTheoremResult:
    """Tonn^{n,k}(L) and the Delone quotient have the same facets, label for label.

    The witness maps each label to its coset representative in a-coordinates;
    the identity on labels is the isomorphism.
    """
    Q = quotient_complex(L)
    T = build_complex(L)
    return MainTheoremResult(Q.facets == T.facets, len(Q.facets), len(T.facets), Q.representatives)


@dataclass(frozen=True)
class Systole:
    squared: int  # in the ambient k-vector metric
    normalized: Fraction  # squared / (k (k-1)): Delone edge a_i has length 1
    vector: tuple[int, ...]  # a-coordinates of one shortest vector


def _ldl(G: Sequence[Sequence[int]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """``x^T G x = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2``, exactly."""
    m = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    d = []
    u = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        piv = A[i][i]
        if piv <= 0:
            raise TonnetzError("Gram matrix is not positive definite")
        d.append(piv)
        for j in range(i + 1, m):
            u[i][j] = A[i][j] / piv
        for r in range(i + 1, m):
            for c in range(i + 1, m):
                A[r][c] -= piv * u[i][r] * u[i][c]
    return d, u


def _short_vectors(G: Sequence[Sequence[int]], bound: int) -> list[tuple[int, ...]]:
    """All integer ``x`` with ``x^T G x <= bound`` (Fincke-Pohst, exact)."""
    m = len(G)
    d, u = _ldl(G)
    out: list[tuple[int, ...]] = []
    x = [0] * m

    def rec(i: int, remaining: Fraction) -> None:
        if i < 0:
            out.append(tuple(x))
            return
        c = sum((u[i][j] * x[j] for j in range(i + 1, m)), Fraction(0))
        centre = -c
        lo = centre.numerator // centre.denominator
        for direction, first in ((-1, lo), (1, lo + 1)):
            xi = first
            while True:
                t = xi + c
                cost = d[i] * t * t
                if cost > remaining:
                    break
                x[i] = xi
                rec(i - 1, remaining - cost)
                xi += direction
        x[i] = 0

    rec(m - 1, Fraction(bound))
    return out


def shortest_vector(sub: SubLattice) -> Systole:
    """Exact minimum of the ambient norm over nonzero vectors of ``sub``."""
    GL = sub.gram()
    bound = min(GL[i][i] for i in range(len(GL)))
    best = None
    for coeffs in _short_vectors(GL, bound):
        if not any(coeffs):
            continue
        q = tuple(sum(sub.basis[r][c] * coeffs[c] for c in range(len(coeffs))) for r in range(len(coeffs)))
        norm = sub.ambient.norm(q)
        if best is None or (norm, q) < best:
            best = (norm, q)
    norm, q = best
    k = sub.k
    return Systole(norm, Fraction(norm, k * (k - 1)), q)


@dataclass
class IrrationalPatch:
    k: int
    radius: int
    vertices: list[tuple[int, ...]]  # canonical exponent vectors
    distance: dict[tuple[int, ...], int]
    facets: frozenset[tuple[tuple[int, ...], ...]]

    def complex(self) -> tuple[SimplicialComplex, dict[tuple[int, ...], int]]:
        index = {v: i for i, v in enumerate(self.vertices)}
        return SimplicialComplex(tuple(index[v] for v in f) for f in self.facets), index

    @property
    def cells(self) -> frozenset[tuple[tuple[int, ...], ...]]:
        """Top-dimensional Delone cells inside the patch."""
        return frozenset(f for f in self.facets if len(f) == self.k)

    def interior(self) -> list[tuple[int, ...]]:
        return [v for v in self.vertices if self.distance[v] < self.radius]


def _proper_subsets(k: int) -> list[frozenset[int]]:
    return [
        frozenset(c)
        for r in range(1, k)
        for c in itertools.combinations(range(1, k + 1), r)
    ]


def irrational_patch(k: int, radius: int) -> IrrationalPatch:
    """Delone complex restricted to points within graph distance ``radius`` of 0.

    Any irrational length vector gives this same patch, so the construction
    is purely combinatorial: vertices are labelled by exponent vectors.
    """
    if k < 2 or radius < 0:
        raise TonnetzError("need k >= 2 and radius >= 0")
    origin = (0,) * k
    nbrs = [a_subset(k, s) for s in _proper_subsets(k)]
    dist = {origin: 0}
    queue = deque([origin])
    while queue:
        z = queue.popleft()
        if dist[z] == radius:
            continue
        for a in nbrs:
            w = tuple(x + y for x, y in zip(z, a))
            if w not in dist:
                dist[w] = dist[z] + 1
                queue.append(w)
    # maximal simplices of the induced subcomplex
    faces = set()
    for z in dist:
        for cell in delone_star(k, z):
            inside = frozenset(v for v in cell.vertices if v in dist)
            faces.add(inside)
    maximal = [f for f in faces if not any(f < g for g in faces)]
    facets = {
        tuple(sorted(acoords_to_exponents(from_kvector(v)) for v in f)) for f in maximal
    }
    labels = {z: acoords_to_exponents(from_kvector(z)) for z in dist}
    vertices = sorted(labels.values())
    distance = {labels[z]: d for z, d in dist.items()}
    return IrrationalPatch(k, radius, vertices, distance, frozenset(facets))

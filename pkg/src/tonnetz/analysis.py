"""Invariants, isomorphism decisions and enumeration of generic vectors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from tonnetz import intmath
from tonnetz.core import (
    LengthVector,
    SimplicialComplex,
    build_complex,
    is_generic,
    validate,
)
from tonnetz.lattice import (
    SubLattice,
    coset_representatives,
    from_kvector,
    label,
    lambda_L,
    shortest_vector,
    to_kvector,
)


def _increasing(n: int, k: int, lower: int = 1) -> Iterator[tuple[int, ...]]:
    if k == 1:
        if n >= lower:
            yield (n,)
        return
    # the remaining k-1 parts are each larger than this one
    for first in range(lower, n):
        if first * k + k * (k - 1) // 2 > n:
            break
        for rest in _increasing(n - first, k - 1, first + 1):
            yield (first,) + rest


def enumerate_generic(n: int, k: int) -> list[LengthVector]:
    """All strictly increasing generic reduced length vectors with sum ``n``."""
    return [
        validate(n, k, ls)
        for ls in _increasing(n, k)
        if gcd(*ls) == 1 and is_generic(ls)
    ]


# -- point group -----------------------------------------------------------

def point_group(k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Coordinate permutations of Z^k combined with +-identity (order 2 k!)."""
    for perm in itertools.permutations(range(k)):
        for sign in (1, -1):
            yield perm, sign


def act(perm: Sequence[int], sign: int, q: Sequence[int]) -> tuple[int, ...]:
    """Apply a point-group element to a point given in a-coordinates."""
    w = to_kvector(q)
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[perm[i]] = sign * x
    return from_kvector(out)


def transform(sub: SubLattice, perm: Sequence[int], sign: int) -> SubLattice:
    return SubLattice.from_generators(sub.k, [act(perm, sign, g) for g in sub.generators])


def orbit_canon(sub: SubLattice) -> tuple[int, ...]:
    """Lexicographically least HNF over the point-group orbit."""
    best = None
    for perm, sign in point_group(sub.k):
        flat = tuple(x for row in transform(sub, perm, sign).basis for x in row)
        if best is None or flat < best:
            best = flat
    return best


@dataclass(frozen=True)
class InvariantRecord:
    n: int
    k: int
    f_vector: tuple[int, ...]
    systole2: Fraction  # normalized squared systole
    lattice_index: int
    hnf_orbit_canon: tuple[int, ...]

    def as_dict(self) -> dict:
        s = self.systole2
        return {
            "n": self.n,
            "k": self.k,
            "f_vector": list(self.f_vector),
            "systole2": s.numerator if s.denominator == 1 else f"{s.numerator}/{s.denominator}",
            "systole_hint": f"{float(s) ** 0.5:.6f}",
            "lattice_index": self.lattice_index,
            "hnf_orbit_canon": list(self.hnf_orbit_canon),
        }


def invariants(L: LengthVector) -> InvariantRecord:
    sub = lambda_L(L)
    T = build_complex(L)
    return InvariantRecord(
        L.n,
        L.k,
        tuple(T.f_vector()),
        shortest_vector(sub).normalized,
        sub.index,
        orbit_canon(sub),
    )


# -- exhaustive isomorphism ------------------------------------------------

def _adjacency(C: SimplicialComplex) -> dict[int, set[int]]:
    adj = {v: set() for v in C.vertices}
    for f in C.facets:
        for u in f:
            adj[u].update(w for w in f if w != u)
    return adj


def _signatures(C: SimplicialComplex, adj: dict[int, set[int]]) -> dict[int, tuple]:
    star: dict[int, list] = {v: [] for v in C.vertices}
    for f in C.facets:
        for v in f:
            star[v].append(f)
    sig = {}
    for v in C.vertices:
        link_edges = sum(len(f) - 1 for f in star[v])
        sig[v] = (len(star[v]), len(adj[v]), link_edges)
    return sig


def find_isomorphism(A: SimplicialComplex, B: SimplicialComplex) -> dict[int, int] | None:
    """A vertex bijection mapping the facets of ``A`` onto those of ``B``.

    Backtracking: vertices of ``A`` are placed in breadth-first order, each
    candidate image must be adjacent to the images of already placed
    neighbours and share the (star size, degree) signature; every facet whose
    vertices are all placed must land on a facet of ``B``.
    """
    if len(A.vertices) != len(B.vertices) or len(A.facets) != len(B.facets):
        return None
    if A.f_vector() != B.f_vector():
        return None
    adjA, adjB = _adjacency(A), _adjacency(B)
    sigA, sigB = _signatures(A, adjA), _signatures(B, adjB)
    if sorted(sigA.values()) != sorted(sigB.values()):
        return None

    order: list[int] = []
    placed: set[int] = set()
    for root in A.vertices:
        if root in placed:
            continue
        placed.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adjA[v]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    position = {v: i for i, v in enumerate(order)}
    # facets of A to check once their last vertex (in ``order``) is placed
    closing: dict[int, list[tuple[int, ...]]] = {v: [] for v in order}
    for f in A.facets:
        closing[max(f, key=position.__getitem__)].append(f)
    facetsB = B.facets
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def candidates(v: int) -> list[int]:
        images = [mapping[u] for u in adjA[v] if u in mapping]
        if images:
            pool = set(adjB[images[0]])
            for img in images[1:]:
                pool &= adjB[img]
        else:
            pool = set(B.vertices)
        return sorted(b for b in pool - used if sigB[b] == sigA[v])

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for b in candidates(v):
            mapping[v] = b
            used.add(b)
            if all(tuple(sorted(mapping[u] for u in f)) in facetsB for f in closing[v]):
                if extend(i + 1):
                    return True
            del mapping[v]
            used.discard(b)
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


# -- combined decision -----------------------------------------------------

@dataclass
class IsomorphismResult:
    isomorphic: bool
    method: str  # "invariants", "lattice" or "exhaustive"
    witness: dict[int, int] | None = None
    lattice_verdict: bool | None = None
    exhaustive_verdict: bool | None = None
    group_element: tuple[tuple[int, ...], int] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def lattice_isomorphism(L1: LengthVector, L2: LengthVector):
    """Point-group element carrying Lambda_{L1} onto Lambda_{L2}, with the
    induced vertex map ``Z_n -> Z_n``; ``None`` if there is none."""
    if (L1.n, L1.k) != (L2.n, L2.k):
        return None
    s1, s2 = lambda_L(L1), lambda_L(L2)
    for perm, sign in point_group(L1.k):
        if transform(s1, perm, sign) == s2:
            reps = coset_representatives(L1, s1)
            vmap = {x: label(L2, act(perm, sign, q)) for x, q in reps.items()}
            return (perm, sign), vmap
    return None


def _is_iso_map(A: SimplicialComplex, B: SimplicialComplex, vmap: dict[int, int]) -> bool:
    if len(set(vmap.values())) != len(vmap):
        return False
    return {tuple(sorted(vmap[v] for v in f)) for f in A.facets} == set(B.facets)


def is_isomorphic(L1: LengthVector, L2: LengthVector, oracle: bool = False) -> IsomorphismResult:
    """Decide whether Tonn(L1) and Tonn(L2) are combinatorially isomorphic.

    Cheap invariants reject first. A point-group match of the two lattices
    gives a witness; when none exists the exhaustive search on the built
    complexes decides. With ``oracle`` both the lattice path and the
    exhaustive search always run, so their verdicts can be compared.
    """
    if (L1.n, L1.k) != (L2.n, L2.k):
        return IsomorphismResult(False, "invariants")
    s1, s2 = lambda_L(L1), lambda_L(L2)
    same_systole = shortest_vector(s1).squared == shortest_vector(s2).squared
    if not same_systole and not oracle:
        return IsomorphismResult(False, "invariants")
    T1, T2 = build_complex(L1), build_complex(L2)
    found = lattice_isomorphism(L1, L2)
    result = IsomorphismResult(False, "lattice", lattice_verdict=found is not None)
    if found is not None:
        element, vmap = found
        if not _is_iso_map(T1, T2, vmap):
            raise AssertionError(f"point-group witness for {L1} ~ {L2} is not simplicial")
        result.isomorphic, result.witness, result.group_element = True, vmap, element
        if not oracle:
            return result
    mapping = find_isomorphism(T1, T2)
    result.exhaustive_verdict = mapping is not None
    if found is None:
        result.method = "exhaustive" if same_systole else "invariants"
        result.isomorphic = mapping is not None
        result.witness = mapping
    return result


@dataclass
class Classification:
    n: int
    k: int
    classes: list[list[LengthVector]]
    records: list[InvariantRecord]
    pairs: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "classes": [
                {"members": [list(L.lengths) for L in cls], "invariants": rec.as_dict()}
                for cls, rec in zip(self.classes, self.records)
            ],
            "pairs": self.pairs,
        }


def classify(n: int, k: int, oracle: bool = True) -> Classification:
    """Partition the generic reduced vectors for ``(n, k)`` into isomorphism classes.

    With ``oracle`` every pair is decided both by the lattice path and by the
    exhaustive search and both verdicts are recorded.
    """
    vectors = enumerate_generic(n, k)
    classes: list[list[LengthVector]] = []
    verdict: dict[tuple[int, int], bool] = {}
    pairs = []
    for i, j in itertools.combinations(range(len(vectors)), 2):
        if not oracle:
            continue
        res = is_isomorphic(vectors[i], vectors[j], oracle=True)
        verdict[i, j] = res.isomorphic
        pairs.append({
            "pair": [list(vectors[i].lengths), list(vectors[j].lengths)],
            "isomorphic": res.isomorphic,
            "lattice": res.lattice_verdict,
            "exhaustive": res.exhaustive_verdict,
        })
    for idx, L in enumerate(vectors):
        for cls_members in classes:
            rep = vectors.index(cls_members[0])
            same = verdict[rep, idx] if oracle else is_isomorphic(cls_members[0], L).isomorphic
            if same:
                cls_members.append(L)
                break
        else:
            classes.append([L])
    records = [invariants(cls[0]) for cls in classes]
    return Classification(n, k, classes, records, pairs)

"""Links, connectivity, manifold checks and integral simplicial homology."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from tonnetz._parallel import pmap
from tonnetz.core import Simplex, SimplicialComplex, TonnetzComplex, stirling2
from tonnetz.errors import FaceNotInComplex, NotGeneric
from tonnetz.kernels import smith_diagonal


@dataclass(frozen=True)
class LinkComplex:
    base: Simplex
    facets: frozenset[Simplex]

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.facets)


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)


def link(T: SimplicialComplex, tau: Iterable[int]) -> LinkComplex:
    tau = tuple(sorted(tau))
    if tau not in T:
        raise FaceNotInComplex(f"{tau} is not a face")
    base = set(tau)
    facets = frozenset(
        tuple(v for v in f if v not in base) for f in T.facets if base.issubset(f)
    )
    facets = frozenset(f for f in facets if f)
    return LinkComplex(tau, facets)


def _gaps(n: int, tau: Simplex) -> list[int]:
    if len(tau) == 1:
        return [n]
    return [b - a for a, b in zip(tau, tau[1:])] + [tau[0] + n - tau[-1]]


def link_join_profile(T: TonnetzComplex, tau: Iterable[int]) -> tuple[int, ...]:
    """Part sizes ``|I_j|`` of the ordered partition behind the face ``tau``.

    The gap after the j-th vertex (in increasing order, wrapping around) is
    the length sum of ``I_j``; genericity makes the decoding unique.
    """
    L = T.L
    if not L.generic:
        raise NotGeneric(f"{L} is not generic")
    tau = tuple(sorted(v % L.n for v in tau))
    if tau not in T:
        raise FaceNotInComplex(f"{tau} is not a face")
    sizes = []
    for gap in _gaps(L.n, tau):
        part = frozenset(range(1, L.k + 1)) if gap == L.n else L.decode(gap)
        if part is None:
            raise FaceNotInComplex(f"gap {gap} of {tau} is not a subset sum")
        sizes.append(len(part))
    return tuple(sizes)


def _boundary_dual_permutohedron(s: int) -> list[int]:
    """Face counts of the boundary of the simplicial polytope polar to the
    (s-1)-permutohedron, indexed by vertex count (index 0 = empty face).

    Faces with ``m`` vertices are chains of ``m`` proper nonempty subsets of
    ``[s]``, i.e. ordered partitions of ``[s]`` into ``m + 1`` blocks.
    """
    return [1] + [factorial(m + 1) * stirling2(s, m + 1) for m in range(1, s)]


def join_f_vector(sizes: Sequence[int]) -> list[int]:
    """f-vector (by dimension) of the join of the boundaries for ``sizes``."""
    poly = [1]
    for s in sizes:
        factor = _boundary_dual_permutohedron(s)
        out = [0] * (len(poly) + len(factor) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        poly = out
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly[1:]


def connected_components(T: SimplicialComplex) -> list[list[int]]:
    parent = {v: v for v in T.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in T.facets:
        root = find(f[0])
        for v in f[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    groups: dict[int, list[int]] = {}
    for v in T.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _strongly_connected(facets: frozenset[Simplex]) -> bool:
    """Facets connected through shared codimension-one faces."""
    facets = list(facets)
    if not facets:
        return False
    by_ridge: dict[Simplex, list[int]] = {}
    for idx, f in enumerate(facets):
        for i in range(len(f)):
            by_ridge.setdefault(f[:i] + f[i + 1:], []).append(idx)
    seen = {0}
    stack = [0]
    while stack:
        idx = stack.pop()
        f = facets[idx]
        for i in range(len(f)):
            for other in by_ridge[f[:i] + f[i + 1:]]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
    return len(seen) == len(facets)


def _ridge_degrees(facets: frozenset[Simplex]) -> dict[Simplex, int]:
    deg: dict[Simplex, int] = {}
    for f in facets:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            deg[r] = deg.get(r, 0) + 1
    return deg


def check_sphere_link(facets: frozenset[Simplex], k: int, expected: int | None) -> list[str]:
    """Failures of the link of a vertex against a (k-2)-sphere; [] if none."""
    dim = k - 2
    problems = []
    if expected is not None and len(facets) != expected:
        problems.append(f"link has {len(facets)} facets, expected {expected}")
    if any(len(f) != dim + 1 for f in facets):
        problems.append(f"link is not pure of dimension {dim}")
        return problems
    if dim == 0:
        if len(facets) != 2:
            problems.append(f"0-dimensional link has {len(facets)} points, expected 2")
        return problems
    bad = {r: c for r, c in _ridge_degrees(facets).items() if c != 2}
    if bad:
        r, c = next(iter(sorted(bad.items())))
        problems.append(f"{len(bad)} ridges not in exactly two facets (e.g. {r} in {c})")
    if not _strongly_connected(facets):
        problems.append("link is not connected")
    chi = SimplicialComplex(facets).euler_characteristic()
    if chi != 1 + (-1) ** dim:
        problems.append(f"link Euler characteristic {chi}, expected {1 + (-1) ** dim}")
    if dim == 2 and not problems:
        # every vertex of the surface must itself have a circle link
        for v in sorted({v for f in facets for v in f}):
            around = frozenset(tuple(u for u in f if u != v) for f in facets if v in f)
            if not _strongly_connected(around) or any(c != 2 for c in _ridge_degrees(around).values()):
                problems.append(f"link is singular at vertex {v}")
                break
    return problems


@dataclass
class ManifoldReport:
    k: int
    passed: bool
    sphere_certified: bool
    vertices_checked: int
    failures: dict[int, list[str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "passed": self.passed,
            "sphere_certified": self.sphere_certified,
            "vertices_checked": self.vertices_checked,
            "failures": {str(v): msgs for v, msgs in sorted(self.failures.items())},
            "notes": list(self.notes),
        }

    def as_text(self) -> str:
        lines = [
            f"{key} = {json.dumps(value)}" for key, value in self.as_dict().items() if key != "failures"
        ]
        for v, msgs in sorted(self.failures.items()):
            for msg in msgs:
                lines.append(f"failure.{v} = {msg}")
        return "\n".join(lines)


def verify_manifold(T: TonnetzComplex) -> ManifoldReport:
    """Check every vertex link of ``T`` against a (k-2)-sphere.

    For k <= 4 the checks certify the sphere exactly (a connected 2-regular
    graph is a circle; a connected closed surface with chi = 2 is S^2). For
    larger k only necessary conditions are tested, and the report says so.
    """
    k = T.L.k
    expected = factorial(k)

    def one(v: int) -> tuple[int, list[str]]:
        return v, check_sphere_link(link(T, (v,)).facets, k, expected)

    failures = {v: msgs for v, msgs in pmap(one, T.vertices) if msgs}
    notes = [f"each vertex link: {expected} facets, pure of dimension {k - 2}"]
    if k >= 3:
        notes.append("ridges in exactly two facets, strongly connected, sphere Euler characteristic")
    if k == 4:
        notes.append("vertex links of each link are circles")
    certified = k <= 4
    if not certified:
        notes.append("k >= 5: only necessary conditions for sphericity were checked")
    if not T.L.generic:
        notes.append("length vector is not generic; built permissively")
    passed = not failures
    return ManifoldReport(k, passed, passed and certified, len(T.vertices), failures, notes)


def boundary_matrix(lower: Sequence[Simplex], upper: Sequence[Simplex]) -> list[list[int]]:
    """Integer matrix of the boundary map, rows = ``lower``, cols = ``upper``.

    The face dropping position ``i`` of an increasing simplex gets sign (-1)^i.
    """
    index = {s: i for i, s in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, s in enumerate(upper):
        for i in range(len(s)):
            mat[index[s[:i] + s[i + 1:]]][j] = -1 if i % 2 else 1
    return mat


def simplicial_homology(T: SimplicialComplex) -> HomologyProfile:
    """Betti numbers and torsion over the integers via Smith normal form."""
    top = T.dimension
    faces = [sorted(T.faces(d)) for d in range(top + 1)]
    # invariant factors of d_d : C_d -> C_{d-1}, for d = 1..top
    factors = {0: [], top + 1: []}
    for d in range(1, top + 1):
        factors[d] = smith_diagonal(boundary_matrix(faces[d - 1], faces[d]))
    betti = []
    torsion = []
    for d in range(top + 1):
        cycles = len(faces[d]) - len(factors[d])
        betti.append(cycles - len(factors[d + 1]))
        torsion.append(tuple(x for x in factors[d + 1] if x > 1))
    return HomologyProfile(tuple(betti), tuple(torsion))

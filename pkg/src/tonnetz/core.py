"""Length vectors and the direct construction of Tonnetz complexes.

Vertices are the least nonnegative residues ``0..n-1``; a simplex is the
increasing tuple of its vertices. Indices of lengths are 1-based in the
public API (``sigma=(2, 1, 3)`` means "take l_2, then l_1, then l_3").
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Iterable, Iterator, Sequence

from tonnetz.errors import NotGeneric, SumMismatch, TonnetzError

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class LengthVector:
    n: int
    k: int
    lengths: tuple[int, ...]
    generic: bool
    reduced: bool

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.lengths)) + ")"

    @property
    def divisor(self) -> int:
        return gcd(*self.lengths)

    def subset_sum(self, subset: Iterable[int]) -> int:
        """Sum of ``l_i`` over the 1-based indices in ``subset``."""
        return sum(self.lengths[i - 1] for i in subset)

    def mask_sums(self) -> list[int]:
        """``sums[mask]`` for every bitmask over the 0-based indices."""
        sums = [0] * (1 << self.k)
        for mask in range(1, 1 << self.k):
            low = (mask & -mask).bit_length() - 1
            sums[mask] = sums[mask & (mask - 1)] + self.lengths[low]
        return sums

    def decode(self, length: int) -> frozenset[int] | None:
        """The unique nonempty proper index set summing to ``length``, if any.

        Only meaningful for generic vectors, where subset sums are distinct.
        """
        table = _decode_table(self)
        return table.get(length)


_DECODE: dict[LengthVector, dict[int, frozenset[int]]] = {}


def _decode_table(L: LengthVector) -> dict[int, frozenset[int]]:
    table = _DECODE.get(L)
    if table is None:
        table = {}
        full = (1 << L.k) - 1
        for mask, s in enumerate(L.mask_sums()):
            if 0 < mask < full:
                table[s] = frozenset(i + 1 for i in range(L.k) if mask >> i & 1)
        _DECODE[L] = table
    return table


def is_generic(lengths: Sequence[int]) -> bool:
    """All 2^k subset sums pairwise distinct."""
    sums = {0}
    for l in lengths:
        shifted = {s + l for s in sums}
        if shifted & sums:
            return False
        sums |= shifted
    return len(sums) == 1 << len(lengths)


def validate(n: int, k: int, lengths: Sequence[int]) -> LengthVector:
    lengths = tuple(int(l) for l in lengths)
    if k < 2:
        raise TonnetzError(f"k must be at least 2, got {k}")
    if len(lengths) != k:
        raise TonnetzError(f"expected {k} lengths, got {len(lengths)}")
    if any(l < 1 for l in lengths):
        raise TonnetzError("lengths must be positive integers")
    if sum(lengths) != n:
        raise SumMismatch(f"lengths sum to {sum(lengths)}, not n={n}")
    return LengthVector(n, k, lengths, is_generic(lengths), gcd(*lengths) == 1)


def length_vector(*lengths: int) -> LengthVector:
    """Shorthand: ``length_vector(3, 4, 5)`` is Tonn^{12,3}(3,4,5)'s vector."""
    if len(lengths) == 1 and not isinstance(lengths[0], int):
        lengths = tuple(lengths[0])
    return validate(sum(lengths), len(lengths), lengths)


def facet(L: LengthVector, x: int, sigma: Sequence[int]) -> Simplex:
    """Vertex set ``{x, x+l_s1, x+l_s1+l_s2, ...}`` reduced mod n."""
    if sorted(sigma) != list(range(1, L.k + 1)):
        raise TonnetzError(f"{tuple(sigma)} is not a permutation of 1..{L.k}")
    verts = [x % L.n]
    acc = x
    for i in sigma[:-1]:
        acc += L.lengths[i - 1]
        verts.append(acc % L.n)
    return tuple(sorted(verts))


def faces_of(simplex: Simplex, size: int) -> Iterator[Simplex]:
    return itertools.combinations(simplex, size)


class SimplicialComplex:
    """A pure finite simplicial complex given by its facets."""

    def __init__(self, facets: Iterable[Sequence[int]]):
        self.facets: frozenset[Simplex] = frozenset(tuple(sorted(f)) for f in facets)
        self._faces: dict[int, frozenset[Simplex]] = {}

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def vertices(self) -> list[int]:
        return sorted({v for f in self.facets for v in f})

    def closure_faces(self, d: int) -> frozenset[Simplex]:
        """All ``d``-faces obtained by downward closure of the facets."""
        return frozenset(s for f in self.facets for s in faces_of(f, d + 1))

    def faces(self, d: int) -> frozenset[Simplex]:
        if d not in self._faces:
            self._faces[d] = self.closure_faces(d)
        return self._faces[d]

    def f_vector(self) -> list[int]:
        return [len(self.faces(d)) for d in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex(tuple(mapping[v] for v in f) for f in self.facets)

    def __contains__(self, simplex: Iterable[int]) -> bool:
        s = tuple(sorted(simplex))
        if not s:
            return True
        return s in self.faces(len(s) - 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.facets)} facets, dim {self.dimension})"


class TonnetzComplex(SimplicialComplex):
    """Tonn^{n,k}(L). Faces come from ordered partitions of the lengths."""

    def __init__(self, L: LengthVector, facets: Iterable[Simplex], permissive: bool = False):
        super().__init__(facets)
        self.L = L
        self.permissive = permissive

    @property
    def dimension(self) -> int:
        return self.L.k - 1

    @property
    def vertices(self) -> list[int]:
        return list(range(self.L.n))

    def faces(self, d: int) -> frozenset[Simplex]:
        if not 0 <= d < self.L.k:
            raise TonnetzError(f"dimension {d} outside 0..{self.L.k - 1}")
        if d not in self._faces:
            self._faces[d] = _partition_faces(self.L, d)
        return self._faces[d]

    def __repr__(self) -> str:
        return f"Tonn^{{{self.L.n},{self.L.k}}}{self.L}"


def _chains(k: int, length: int, lower: int = 0) -> Iterator[tuple[int, ...]]:
    """Strict chains ``lower < A_1 < ... < A_length < full`` of bitmasks."""
    if length == 0:
        yield ()
        return
    full = (1 << k) - 1
    free = full & ~lower
    sub = free
    while sub:
        mask = lower | sub
        if mask != full:
            for rest in _chains(k, length - 1, mask):
                yield (mask,) + rest
        sub = (sub - 1) & free


def _partition_faces(L: LengthVector, d: int) -> frozenset[Simplex]:
    sums = L.mask_sums()
    offsets = {tuple(sorted([0] + [sums[m] for m in chain])) for chain in _chains(L.k, d)}
    n = L.n
    return frozenset(
        tuple(sorted((x + o) % n for o in offs)) for offs in offsets for x in range(n)
    )


def build_complex(L: LengthVector, permissive: bool = False) -> TonnetzComplex:
    """Tonn^{n,k}(L) from all ``n * k!`` facet formula instances.

    Non-generic vectors are refused unless ``permissive`` is set.
    """
    if not L.generic and not permissive:
        raise NotGeneric(f"{L} is not generic")
    facets = {
        facet(L, x, sigma)
        for sigma in itertools.permutations(range(1, L.k + 1))
        for x in range(L.n)
    }
    return TonnetzComplex(L, facets, permissive=permissive)


def stirling2(k: int, m: int) -> int:
    """Stirling number of the second kind via S(k,m) = m S(k-1,m) + S(k-1,m-1)."""
    row = [1]  # S(0, 0)
    for kk in range(1, k + 1):
        new = [0] * (kk + 1)
        for mm in range(1, kk + 1):
            new[mm] = mm * (row[mm] if mm < len(row) else 0) + row[mm - 1]
        row = new
    return row[m] if 0 <= m < len(row) else 0


def stirling_f_vector(n: int, k: int) -> list[int]:
    """Closed-form f-vector: ``f_{m-1} = n * m! * S(k, m) / m``."""
    return [n * factorial(m) * stirling2(k, m) // m for m in range(1, k + 1)]


def components_of_scaled(L: LengthVector, p: int | None = None) -> list[SimplicialComplex]:
    """Split Tonn^{pn,k}(pL) into its ``p`` residue-class subcomplexes.

    ``L`` here is the scaled vector; ``p`` defaults to the gcd of its lengths.
    Component ``r`` holds the facets whose vertices are all ``= r (mod p)``.
    """
    if p is None:
        p = L.divisor
    if L.divisor % p:
        raise TonnetzError(f"{p} does not divide every length of {L}")
    T = build_complex(L)
    parts: list[set[Simplex]] = [set() for _ in range(p)]
    for f in T.facets:
        parts[f[0] % p].add(f)
    return [SimplicialComplex(part) for part in parts]


def scale_down(L: LengthVector, p: int) -> LengthVector:
    return validate(L.n // p, L.k, [l // p for l in L.lengths])


def dumps_complex(facets: Iterable[Sequence], header: str) -> str:
    """Line format: header, then one facet per line, lines in sorted order."""
    rows = sorted(tuple(f) for f in facets)
    lines = [header] + [" ".join(_fmt(v) for v in f) for f in rows]
    return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return ",".join(map(str, v))
    return str(v)


def dumps_tonnetz(T: TonnetzComplex) -> str:
    L = T.L
    header = " ".join(map(str, ["tonnetz", L.n, L.k, *L.lengths]))
    return dumps_complex(T.facets, header)


def loads_complex(text: str) -> tuple[list[str], list[Simplex]]:
    """Inverse of :func:`dumps_complex`: ``(header tokens, facets)``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split()
    facets = []
    for ln in lines[1:]:
        toks = ln.split()
        if "," in ln:
            facets.append(tuple(tuple(int(a) for a in t.split(",")) for t in toks))
        else:
            facets.append(tuple(int(t) for t in toks))
    return header, facets


def load_tonnetz(text: str) -> TonnetzComplex:
    header, facets = loads_complex(text)
    if header[0] != "tonnetz":
        raise TonnetzError(f"not a tonnetz file (header {header[0]!r})")
    n, k, *lengths = map(int, header[1:])
    L = validate(n, k, lengths)
    return TonnetzComplex(L, facets, permissive=not L.generic)

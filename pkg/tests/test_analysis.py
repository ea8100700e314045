import itertools
from math import gcd

import pytest

from tonnetz import analysis
from tonnetz.analysis import classify, enumerate_generic, find_isomorphism, invariants, is_isomorphic
from tonnetz.core import build_complex, is_generic, length_vector, validate


def test_enumerate_examples():
    assert [L.lengths for L in enumerate_generic(7, 3)] == [(1, 2, 4)]
    assert [L.lengths for L in enumerate_generic(12, 3)] == [(1, 2, 9), (1, 3, 8), (1, 4, 7), (2, 3, 7), (3, 4, 5)]
    assert [L.lengths for L in enumerate_generic(11, 3)] == [(1, 2, 8), (1, 3, 7), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


@pytest.mark.parametrize("n", range(6, 21))
def test_enumerate_complement(n):
    found = {L.lengths for L in enumerate_generic(n, 3)}
    for ls in itertools.combinations_with_replacement(range(1, n), 3):
        if sum(ls) != n:
            continue
        ok = is_generic(ls) and gcd(*ls) == 1
        assert (ls in found) == ok
    for L in enumerate_generic(n, 3):
        V = validate(n, 3, L.lengths)
        assert V.generic and V.reduced


def test_invariants():
    assert invariants(length_vector(3, 4, 5)).systole2 == 9
    assert invariants(length_vector(2, 3, 7)).systole2 == 7
    r = invariants(length_vector(1, 2, 9))
    assert r.systole2 == 7 and r == invariants(length_vector(2, 3, 7))
    assert r.as_dict()["systole_hint"] == "2.645751"


def test_isomorphism_examples():
    a, b, c = length_vector(2, 3, 7), length_vector(1, 2, 9), length_vector(3, 4, 5)
    res = is_isomorphic(a, b, oracle=True)
    assert res.isomorphic and res.lattice_verdict and res.exhaustive_verdict
    A, B = build_complex(a), build_complex(b)
    assert {tuple(sorted(res.witness[v] for v in f)) for f in A.facets} == B.facets
    assert not is_isomorphic(c, a)
    assert not is_isomorphic(c, a, oracle=True).exhaustive_verdict
    same = is_isomorphic(c, c)
    assert same and same.witness == {x: x for x in range(12)}


def test_exhaustive_search_on_relabelled_copy():
    T = build_complex(length_vector(1, 3, 8))
    perm = {v: (5 * v + 7) % 12 for v in range(12)}
    U = T.relabel(perm)
    m = find_isomorphism(T, U)
    assert m is not None
    assert T.relabel(m) == U


def test_classify_12():
    cl = classify(12, 3)
    classes = [sorted(L.lengths for L in c) for c in cl.classes]
    assert [(1, 2, 9), (2, 3, 7)] in classes
    assert any((3, 4, 5) in c and (2, 3, 7) not in c for c in classes)
    for pair in cl.pairs:
        assert pair["lattice"] == pair["exhaustive"] == pair["isomorphic"]
    for c, rec in zip(cl.classes, cl.records):
        assert all(invariants(L) == rec for L in c)


def test_symmetry_and_reflexivity():
    vs = enumerate_generic(12, 3)
    for a, b in itertools.product(vs, repeat=2):
        assert bool(is_isomorphic(a, b)) == bool(is_isomorphic(b, a))
    assert all(is_isomorphic(a, a) for a in vs)


def test_small_classes():
    assert [[L.lengths for L in c] for c in classify(7, 3).classes] == [[(1, 2, 4)]]
    assert [[L.lengths for L in c] for c in classify(8, 3).classes] == [[(1, 2, 5)]]


def test_point_group_size():
    assert len(list(analysis.point_group(3))) == 12
    assert len(list(analysis.point_group(4))) == 48

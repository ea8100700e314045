import itertools

import pytest

from tonnetz import core
from tonnetz.core import build_complex, facet, length_vector, stirling_f_vector, validate
from tonnetz.errors import NotGeneric, SumMismatch, TonnetzError


def test_validate_flags():
    L = validate(12, 3, (3, 4, 5))
    assert (L.generic, L.reduced) == (True, True)
    assert validate(6, 3, (1, 2, 3)).generic is False
    L = validate(24, 3, (6, 8, 10))
    assert (L.generic, L.reduced) == (True, False)


@pytest.mark.parametrize("args", [(12, 3, (3, 4, 6)), (12, 3, (3, 4)), (5, 1, (5,)), (6, 3, (0, 2, 4))])
def test_validate_rejects(args):
    with pytest.raises(TonnetzError):
        validate(*args)


def test_sum_mismatch_reason():
    with pytest.raises(SumMismatch) as exc:
        validate(13, 3, (3, 4, 5))
    assert exc.value.reason == "sum mismatch"


def test_generic_matches_bruteforce():
    for ls in itertools.product(range(1, 7), repeat=3):
        sums = [sum(c) for r in range(4) for c in itertools.combinations(ls, r)]
        assert core.is_generic(ls) == (len(set(sums)) == len(sums))


def test_facet_examples(classical):
    assert facet(classical, 0, (1, 2, 3)) == (0, 3, 7)
    assert facet(classical, 0, (2, 1, 3)) == (0, 4, 7)
    assert facet(length_vector(1, 2, 4), 0, (1, 2, 3)) == (0, 1, 3)


def test_classical_facets(classical):
    T = build_complex(classical)
    expected = {tuple(sorted({x, (x + 3) % 12, (x + 7) % 12})) for x in range(12)}
    expected |= {tuple(sorted({x, (x + 4) % 12, (x + 7) % 12})) for x in range(12)}
    assert T.facets == expected


@pytest.mark.parametrize("lengths,count", [((3, 4, 5), 24), ((1, 2, 4), 14), ((1, 2, 4, 8), 90)])
def test_facet_counts_against_formula_dedup(lengths, count):
    L = length_vector(*lengths)
    brute = {facet(L, x, s) for x in range(L.n) for s in itertools.permutations(range(1, L.k + 1))}
    assert len(brute) == count
    assert build_complex(L).facets == brute


def test_cyclic_shift_overcount(classical):
    L = classical
    for x in range(L.n):
        for s in itertools.permutations((1, 2, 3)):
            shifted = s[1:] + s[:1]
            assert facet(L, x, s) == facet(L, x + L.lengths[s[0] - 1], shifted)


def test_faces_examples(classical):
    T = build_complex(classical)
    assert len(T.faces(0)) == 12
    assert len(T.faces(1)) == 36
    assert len(build_complex(length_vector(1, 2, 4)).faces(1)) == 21


@pytest.mark.parametrize("lengths", [(3, 4, 5), (1, 2, 4), (2, 3, 7), (1, 2, 4, 8)])
def test_partition_faces_match_closure(lengths):
    T = build_complex(length_vector(*lengths))
    for d in range(T.dimension + 1):
        assert T.faces(d) == T.closure_faces(d)
        assert len(T.faces(d)) == stirling_f_vector(T.L.n, T.L.k)[d]
        if d:
            lower = T.faces(d - 1)
            assert all(f in lower for s in T.faces(d) for f in core.faces_of(s, d))


def test_f_vectors():
    assert build_complex(length_vector(3, 4, 5)).f_vector() == [12, 36, 24]
    T = build_complex(length_vector(1, 2, 4, 8))
    assert T.f_vector() == [15, 105, 180, 90]
    assert T.euler_characteristic() == 0


def test_stirling_f_vector():
    assert stirling_f_vector(12, 3) == [12, 36, 24]
    assert stirling_f_vector(9, 1) == [9]
    assert stirling_f_vector(15, 4) == [15, 105, 180, 90]


def test_non_generic_refused_unless_permissive():
    L = validate(6, 3, (1, 2, 3))
    with pytest.raises(NotGeneric) as exc:
        build_complex(L)
    assert exc.value.reason == "not generic"
    T = build_complex(L, permissive=True)
    assert T.f_vector() == [6, 15, 12]


def test_components_of_scaled():
    parts = core.components_of_scaled(validate(24, 3, (6, 8, 10)), 2)
    assert [len(c.facets) for c in parts] == [24, 24]
    assert len(core.components_of_scaled(length_vector(3, 4, 5), 1)) == 1
    assert len(core.components_of_scaled(validate(21, 3, (3, 6, 12)))) == 3


def test_k2_is_a_polygon():
    T = build_complex(length_vector(2, 3))
    assert T.f_vector() == [5, 5]
    assert T.euler_characteristic() == 0


def test_text_round_trip(classical):
    T = build_complex(classical)
    text = core.dumps_tonnetz(T)
    assert text.splitlines()[0] == "tonnetz 12 3 3 4 5"
    assert text.splitlines()[1] == "0 3 7"
    back = core.load_tonnetz(text)
    assert back.facets == T.facets and back.L == T.L
    assert core.dumps_tonnetz(back) == text

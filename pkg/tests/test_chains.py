import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tonnetz import chains
from tonnetz.chains import Chain, EdgeWord, edge_l_type, omega, theta
from tonnetz.core import build_complex, length_vector, validate
from tonnetz.errors import NotClosed, NotGeneric, NoType
from tonnetz.lattice import in_lambda

from conftest import INSTANCES

L345 = length_vector(3, 4, 5)
L237 = length_vector(2, 3, 7)


def test_l_types():
    assert edge_l_type(L345, 0, 3) == {1}
    assert edge_l_type(L345, 0, 7) == {1, 2}
    assert edge_l_type(L345, 3, 0) == {2, 3}
    with pytest.raises(NoType):
        edge_l_type(L345, 0, 1)
    with pytest.raises(NotGeneric):
        edge_l_type(validate(6, 3, (1, 2, 3)), 0, 3)


def test_atom_decomposition():
    assert chains.atom_decomposition(L345, 0, 7).exponents == (1, 1, 0)
    assert chains.atom_decomposition(L345, 0, 3).exponents == (1, 0, 0)
    w = chains.atom_decomposition(L345, 3, 0)
    assert w.exponents == (0, 1, 1) and w.endpoint == 0 and w.winding == 1


def test_theta_examples():
    assert theta(L345, 1, 2, Chain([(0, 3, 1)])) == 1
    assert theta(L345, 1, 2, Chain([(0, 7, 1)])) == 0
    for f in build_complex(L345).facets:
        a, b, c = f
        assert theta(L345, 1, 2, Chain([(a, b, 1), (b, c, 1), (c, a, 1)])) == 0


def test_omega_examples():
    assert chains.a_vector(3, 1) == (2, -1, -1)
    assert omega(L345, EdgeWord(L345, 0, (1, 0, 0))) == (2, -1, -1)
    assert omega(L345, EdgeWord(L345, 0, (1, 1, 1))) == (0, 0, 0)
    assert omega(L237, EdgeWord(L237, 0, (3, 2, 0))) == (4, 1, -5)


@pytest.mark.parametrize("L", INSTANCES[::4] + INSTANCES[-1:])
def test_cocycle_and_sum_laws(L):
    T = build_complex(L)
    k = L.k
    for f in T.faces(2):
        a, b, c = f
        bd = Chain([(a, b, 1), (b, c, 1), (c, a, 1)])
        for i, j in itertools.permutations(range(1, k + 1), 2):
            assert theta(L, i, j, bd) == 0
    for u, v in T.faces(1):
        e = Chain([(u, v, 1)])
        assert sum(chains.omega_i(L, i, e) for i in range(1, k + 1)) == 0
        for i, j in itertools.permutations(range(1, k + 1), 2):
            assert theta(L, i, j, e) == -theta(L, j, i, e) == -theta(L, i, j, Chain([(v, u, 1)]))


def test_omega_i_matches_vector_omega():
    for u, v in build_complex(L237).faces(1):
        e = Chain([(u, v, 1)])
        assert omega(L237, e) == tuple(chains.omega_i(L237, i, e) for i in (1, 2, 3))


def test_chain_canonical_storage():
    c = Chain([(5, 2, 1)])
    assert list(c.edges()) == [(2, 5, -1)]
    assert Chain([(2, 5, 1), (5, 2, 1)]) == Chain()
    assert (2 * c - c) == c


def test_canonical_cycles():
    T = build_complex(L345)
    cs = [chains.canonical_cycle(T, i) for i in (1, 2, 3)]
    for c in cs:
        assert all(v == 0 for v in c.boundary().values())
    total = cs[0] + cs[1] + cs[2]
    assert omega(L345, total) == (0, 0, 0)
    p = chains.chain_exponents(L345, total)
    assert len(set(p)) == 1
    loops = chains.atomic_loops(L345, 1)
    assert len(loops) == 3 and all(len(lp) == 4 for lp in loops)


def test_pairing_matrix():
    M, det = chains.pairing_matrix(12, 3, build_complex(L345))
    assert M == [[24, -12], [-12, 24]] and det == 432
    assert chains.pairing_matrix(9, 2)[1] == 9
    M, det = chains.pairing_matrix(15, 4, build_complex(length_vector(1, 2, 4, 8)))
    assert det == 54000 == 15 * 60**2


def test_normal_forms():
    assert chains.homology_normal_form((5, 4, 4)) == (1, 0, 0)
    assert chains.homology_normal_form((1, 1, 1)) == (0, 0, 0)
    assert chains.homology_normal_form((0, 3, 0)) == chains.homology_normal_form((1, 4, 1))
    with pytest.raises(NotClosed):
        chains.homology_normal_form(EdgeWord(L345, 0, (1, 0, 0)))


@st.composite
def words(draw):
    L = draw(st.sampled_from(INSTANCES))
    letter = st.tuples(st.integers(1, L.k), st.sampled_from((1, -1))).map(lambda t: t[0] * t[1])
    letters = draw(st.lists(letter, max_size=20))
    base = draw(st.integers(0, L.n - 1))
    return L, base, letters


@given(words(), st.randoms())
@settings(max_examples=150, deadline=None)
def test_swap_invariance(data, rnd):
    L, base, letters = data
    w1 = EdgeWord.from_letters(L, base, letters)
    shuffled = list(letters)
    rnd.shuffle(shuffled)
    w2 = EdgeWord.from_letters(L, base, shuffled)
    assert (w1.base, w1.endpoint) == (w2.base, w2.endpoint)
    assert omega(L, w1) == omega(L, w2)
    for i, j in itertools.permutations(range(1, L.k + 1), 2):
        assert theta(L, i, j, w1) == theta(L, i, j, w2)


@given(words())
@settings(max_examples=150, deadline=None)
def test_word_omega_matches_chain_omega(data):
    L, base, letters = data
    chain, x = Chain(), base
    for a in letters:
        step = L.lengths[abs(a) - 1]
        y = (x + step) % L.n if a > 0 else (x - step) % L.n
        chain = chain.add(x, y)
        x = y
    w = EdgeWord.from_letters(L, base, letters)
    assert x == w.endpoint
    assert omega(L, chain) == omega(L, w)
    if w.closed:
        img = omega(L, w)
        assert in_lambda(img)
        assert (img == (0,) * L.k) == (chains.homology_normal_form(w) == (0,) * L.k)


def test_closed_short_words_have_large_exponent():
    for L in [L345, L237, length_vector(1, 2, 9), length_vector(1, 3, 8), length_vector(1, 4, 7)]:
        for p in itertools.product(range(5), repeat=3):
            w = EdgeWord(L, 0, p)
            if w.closed and any(chains.homology_normal_form(w)):
                assert max(p) >= 3

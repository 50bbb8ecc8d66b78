import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realbraid.braid import BraidWord
from realbraid.freegroup import (
    ConjParams,
    FreeAuto,
    FreeWord,
    GroupRingElem,
    artin_action,
    braid_auto,
    conj_involution,
    fox_derivative,
    phi,
)
from realbraid.laurent import ONE, ZERO, parse


def W(rank, *letters):
    return FreeWord(rank, letters)


def words(rank, max_len=10):
    letter = st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda ls: FreeWord(rank, tuple(ls)))


def braids(n, max_len=8):
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))


# -- reduction --------------------------------------------------------------


def test_reduce_examples():
    assert W(2, 1, -1).is_identity()
    assert W(2, 1, 2, -2, 1).letters == (1, 1)
    assert W(3, -2, 2, 3).letters == (3,)


def test_reduce_rejects_bad_index():
    with pytest.raises(ValueError):
        W(2, 3)
    with pytest.raises(ValueError):
        W(2, 0)


@given(words(3), words(3))
def test_word_group_laws(u, v):
    assert (u * u.inverse()).is_identity()
    assert (u * v).inverse() == v.inverse() * u.inverse()


# -- Artin action -----------------------------------------------------------


def test_artin_generator_images():
    s1 = BraidWord(2, (1,))
    assert artin_action(s1, W(2, 1)) == W(2, -1, 2, 1)
    assert artin_action(s1, W(2, 2)) == W(2, 1)


def test_braid_relation_on_generators():
    a, b = BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2))
    # substituting s1, s2, s1 in turn:
    # x1 -> x1^-1 x2 x1 -> x1^-1 x2^-1 x3 x2 x1 -> x1^-1 x2^-1 x3 x2 x1
    assert artin_action(a, W(3, 1)) == W(3, -1, -2, 3, 2, 1)
    for i in (1, 2, 3):
        assert artin_action(a, W(3, i)) == artin_action(b, W(3, i))
    assert artin_action(a, W(3, 3)) == W(3, 1)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        artin_action(BraidWord(3, (1,)), W(2, 1))


@settings(max_examples=50)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 2), words(n))))
def test_braid_relations_on_random_words(args):
    n, i, w = args
    lhs = braid_auto(n, (i, i + 1, i))(w)
    rhs = braid_auto(n, (i + 1, i, i + 1))(w)
    assert lhs == rhs
    for j in range(i + 2, n):
        assert braid_auto(n, (i, j))(w) == braid_auto(n, (j, i))(w)
    assert braid_auto(n, (i, -i))(w) == w


@settings(max_examples=50)
@given(st.integers(2, 6).flatmap(braids))
def test_boundary_word_fixed(b):
    n = b.strands
    boundary = FreeWord(n, tuple(range(n, 0, -1)))
    assert artin_action(b, boundary) == boundary


# -- conjugation involution -------------------------------------------------


def test_conj_involution_examples():
    c = conj_involution(ConjParams(4, 2))
    assert c(W(4, 1)) == W(4, -4)
    c5 = conj_involution(ConjParams(5, 1))
    assert c5(W(5, 2)) == W(5, 4, 3, -2, -3, -4)
    assert c(W(4, 4, 3, 2, 1)) == W(4, 4, 3, 2, 1).inverse()


@pytest.mark.parametrize("params", ConjParams.all(8), ids=str)
def test_conj_involution_is_involution(params):
    c = conj_involution(params)
    assert c.then(c) == FreeAuto.identity(params.N)
    n = params.N
    boundary = FreeWord(n, tuple(range(n, 0, -1)))
    assert c(boundary) == boundary.inverse()


def test_conj_params_validation():
    with pytest.raises(ValueError):
        ConjParams(3, 2)
    with pytest.raises(ValueError):
        ConjParams(3, -1)


# -- Fox calculus -----------------------------------------------------------


def test_fox_axioms():
    assert fox_derivative(W(2, 1, 2), 1) == GroupRingElem.from_word(W(2))
    assert fox_derivative(W(2, -1), 1) == GroupRingElem.from_word(W(2, -1), -1)
    assert fox_derivative(W(2, 2), 1).is_zero()


def test_fox_commutator():
    d = fox_derivative(W(2, -1, -2, 1, 2), 1)
    expected = GroupRingElem.from_word(W(2, -1), -1) + GroupRingElem.from_word(W(2, -1, -2))
    assert d == expected


def test_fox_index_check():
    with pytest.raises(ValueError):
        fox_derivative(W(2, 1), 3)


@settings(max_examples=80)
@given(st.integers(1, 4).flatmap(words))
def test_fox_fundamental_identity(w):
    n = w.rank
    total = GroupRingElem(n)
    for j in range(1, n + 1):
        xj = GroupRingElem.from_word(W(n, j)) - GroupRingElem.from_word(W(n))
        total = total + fox_derivative(w, j) * xj
    assert total == GroupRingElem.from_word(w) - GroupRingElem.from_word(W(n))


@settings(max_examples=50)
@given(words(3, 6), words(3, 6))
def test_fox_product_rule(u, v):
    for j in (1, 2, 3):
        lhs = fox_derivative(u * v, j)
        rhs = fox_derivative(u, j) + GroupRingElem.from_word(u) * fox_derivative(v, j)
        assert lhs == rhs


# -- abelianization ---------------------------------------------------------


def test_phi_examples():
    e = GroupRingElem.from_word(W(2, -1), -1) + GroupRingElem.from_word(W(2, -1, -2))
    assert phi(e) == parse("-t^-1 + t^-2")
    assert phi(GroupRingElem.from_word(W(2))) == ONE
    assert phi(GroupRingElem.from_word(W(2, 1, 2)) - GroupRingElem.from_word(W(2, 2, 1))) == ZERO


def _ring_elems(rank):
    return st.lists(st.tuples(words(rank, 5), st.integers(-3, 3)), max_size=4).map(
        lambda ts: sum((GroupRingElem.from_word(w, c) for w, c in ts), GroupRingElem(rank))
    )


@settings(max_examples=50)
@given(_ring_elems(3), _ring_elems(3))
def test_phi_is_multiplicative(a, b):
    assert phi(a * b) == phi(a) * phi(b)
    assert phi(a + b) == phi(a) + phi(b)

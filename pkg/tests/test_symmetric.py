import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedspecht.combinatorics import (
    Multipartition,
    StandardTableau,
    conjugate,
    enumerate_multicompositions,
    enumerate_multipartitions,
    enumerate_row_standard,
    enumerate_std,
    final_tableau,
    initial_tableau,
    tableau_dominates,
)
from gradedspecht.symmetric import (
    Permutation,
    all_permutations,
    bruhat_leq,
    length,
    lemma22_witness,
    reduced_expression,
    tableau_permutation,
)

import oracles


def test_length_examples():
    assert length(Permutation.identity(4)) == 0
    assert length(Permutation.simple(1, 3)) == 1
    assert length(Permutation((3, 2, 1))) == 3


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_length_and_reduced_words_match_oracle(n):
    for w in all_permutations(n):
        word = reduced_expression(w)
        assert length(w) == oracles.inversions(w.images) == len(word)
        assert oracles.apply_word(word, n) == w.images
        assert word in oracles.reduced_words(w.images)


def test_reduced_expression_examples():
    assert reduced_expression(Permutation.identity(3)) == []
    assert reduced_expression(Permutation((3, 2, 1))) == [1, 2, 1]
    w = Permutation((2, 4, 1, 3))
    assert reduced_expression(w) == reduced_expression(Permutation(w.images))


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_matches_tableau_criterion(n):
    perms = all_permutations(n)
    e = Permutation.identity(n)
    for u, w in itertools.product(perms, repeat=2):
        got = bruhat_leq(u, w)
        assert got == oracles.bruhat_leq(u.images, w.images)
        if got:
            assert length(u) <= length(w)
    assert all(bruhat_leq(e, w) for w in perms)


def test_bruhat_independent_of_reduced_word():
    # every reduced word of w gives the same subword set
    for w in all_permutations(4):
        reach = set()
        for word in oracles.reduced_words(w.images):
            for mask in itertools.product((0, 1), repeat=len(word)):
                reach.add(oracles.apply_word([i for i, m in zip(word, mask) if m], 4))
            break
        assert reach == {u.images for u in all_permutations(4) if bruhat_leq(u, w)}


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_group_laws(a, b):
    u, w = Permutation(tuple(a)), Permutation(tuple(b))
    assert (u * w).inverse() == w.inverse() * u.inverse()
    assert length(w.inverse()) == length(w)
    assert length(u * w) <= length(u) + length(w)
    assert (length(u * w) - length(u) - length(w)) % 2 == 0


def test_tableau_permutation_examples():
    for mu in enumerate_multipartitions(3, 2):
        assert tableau_permutation(initial_tableau(mu)).is_identity()
    col = StandardTableau.from_list([[[1], [2]]])
    assert col == initial_tableau(Multipartition.from_list([[1, 1]]))
    assert tableau_permutation(col).is_identity()


@pytest.mark.parametrize("n,level", [(n, l) for n in range(1, 5) for l in (1, 2)])
def test_tableau_permutation_acts(n, level):
    for mu in enumerate_multipartitions(n, level):
        top = initial_tableau(mu)
        for t in enumerate_std(mu):
            assert top.act(tableau_permutation(t).images) == t
        w_mu = tableau_permutation(final_tableau(mu))
        assert w_mu.inverse() == tableau_permutation(final_tableau(conjugate(mu)))


@pytest.mark.parametrize("n,level", [(n, l) for n in range(1, 5) for l in (1, 2)])
def test_dominance_is_bruhat_for_row_standard(n, level):
    for lam in enumerate_multicompositions(n, level):
        tabs = enumerate_row_standard(lam)
        for v, w in itertools.product(tabs, repeat=2):
            assert tableau_dominates(v, w) == bruhat_leq(tableau_permutation(v), tableau_permutation(w))


# lemma22_witness


def _same_row(t, a, b):
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.row) == (y.comp, y.row)


def _same_col(t, a, b):
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.col) == (y.comp, y.col)


def _witness_inputs(n, level):
    for mu in enumerate_multipartitions(n, level):
        top = initial_tableau(mu)
        for s in enumerate_std(mu):
            for a, b in itertools.combinations(range(1, n + 1), 2):
                if _same_row(top, a, b) and _same_col(s, a, b):
                    yield mu, s, a, b


def test_witness_adjacent_is_identity():
    # 1, 2 share row 1 of t^mu and column 1 of s
    mu = Multipartition.from_list([[2, 1]])
    s = StandardTableau.from_list([[[1, 3], [2]]])
    w, c = lemma22_witness(mu, s, 1, 2)
    assert w.is_identity() and c == 1


@pytest.mark.parametrize("n,level", [(n, l) for n in range(2, 5) for l in (1, 2)])
def test_witness_postconditions(n, level):
    count = 0
    for mu, s, a, b in _witness_inputs(n, level):
        count += 1
        w, c = lemma22_witness(mu, s, a, b)
        assert w.support() <= set(range(a, b + 1))
        sw = s.act(w.images)
        assert isinstance(sw, StandardTableau) and not sw.relaxed
        assert length(tableau_permutation(s) * w) == length(tableau_permutation(s)) + length(w)
        assert _same_row(initial_tableau(mu), c, c + 1)
        assert _same_col(sw, c, c + 1)
    if n >= 3:
        assert count > 0


def test_witness_rejects_bad_input():
    mu = Multipartition.from_list([[2, 1]])
    s = initial_tableau(mu)
    with pytest.raises(ValueError):
        lemma22_witness(mu, s, 1, 2)
    with pytest.raises(ValueError):
        lemma22_witness(mu, s, 2, 1)

from hypothesis import given
from hypothesis import strategies as st

from gradedspecht.laurent import LaurentIntPoly

terms = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6)


def poly(d):
    return LaurentIntPoly(d.items())


def as_dict(p):
    return {e: c for e, c in p.to_list()}


def naive_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def test_canonical_form():
    p = LaurentIntPoly([(2, 1), (0, 3), (2, -1), (-1, 0)])
    assert p.to_list() == [[0, 3]]
    assert LaurentIntPoly.zero().to_list() == []
    assert not LaurentIntPoly.zero()
    assert LaurentIntPoly.from_list([[1, 2], [-3, 1]]).to_list() == [[-3, 1], [1, 2]]


@given(terms, terms)
def test_arithmetic_matches_dicts(a, b):
    pa, pb = poly(a), poly(b)
    summed = {e: a.get(e, 0) + b.get(e, 0) for e in set(a) | set(b)}
    assert as_dict(pa + pb) == {e: c for e, c in summed.items() if c}
    assert as_dict(pa * pb) == naive_mul({e: c for e, c in a.items() if c}, {e: c for e, c in b.items() if c})
    assert pa - pa == LaurentIntPoly.zero()
    assert pa + pb == pb + pa


@given(terms, st.integers(-4, 4))
def test_shift_bar_and_evaluation(a, d):
    p = poly(a)
    assert p.shift(d) == p * LaurentIntPoly.monomial(d)
    assert p.bar().bar() == p
    assert p.bar().at_one() == p.at_one() == sum(a.values())
    assert p.shift(d).bar() == p.bar().shift(-d)
    exps = [e for e, _ in p.to_list()]
    assert exps == sorted(set(exps))
    assert all(c != 0 for _, c in p.to_list())
    assert LaurentIntPoly.from_list(p.to_list()) == p

from fractions import Fraction

import gmpy2
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedspecht.hecke import GF, prime_field, rational_field
from gradedspecht.hecke import kernels, linalg

import oracles

QQ = rational_field()


def to_obj(rows, field):
    return np.array([[field(x) for x in row] for row in rows], dtype=object)


small_ints = st.integers(-4, 4)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
)


def test_gf_arithmetic():
    a, b = GF(3, 7), GF(5, 7)
    assert a + b == GF(1, 7) and a * b == GF(1, 7) and a - b == GF(5, 7)
    assert a * a.inverse() == 1
    assert a ** -1 == a.inverse() and a**0 == 1
    assert b / a == b * a.inverse()
    assert 2 - a == GF(6, 7) and -a == GF(4, 7)
    assert not GF(7, 7) and int(GF(-1, 7)) == 6
    with pytest.raises(ZeroDivisionError):
        GF(0, 5).inverse()


def test_fields():
    f = prime_field(5)
    assert f(7) == GF(2, 5) and f.zero == 0 and f.one == 1
    assert QQ("3/6") == gmpy2.mpq(1, 2)
    assert QQ(Fraction(2, 4)) == gmpy2.mpq(1, 2)
    assert QQ.fmt(gmpy2.mpq(-3, 4)) == "-3/4" and QQ.fmt(gmpy2.mpq(2)) == "2"
    with pytest.raises(ValueError):
        prime_field(4)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_matches_fraction_oracle(rows):
    assert linalg.rank(to_obj(rows, QQ), QQ) == oracles.frac_rank(rows)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=60, deadline=None)
def test_inverse_matches_fraction_oracle(rows):
    m = to_obj(rows, QQ)
    if oracles.frac_rank(rows) < len(rows):
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m, QQ)
        return
    inv = linalg.inverse(m, QQ)
    want = oracles.frac_inverse(rows)
    assert [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in inv] == want


@given(matrices, st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=60, deadline=None)
def test_prime_rank_and_rref(rows, p):
    f = prime_field(p)
    m = to_obj(rows, f)
    rk, r = linalg.rref(m, f)
    red = [[int(x) for x in row] for row in r]
    # reduced echelon form: pivots are 1 and alone in their column
    pivots = []
    for row in red:
        nz = [j for j, x in enumerate(row) if x % p]
        if nz:
            assert row[nz[0]] % p == 1
            pivots.append(nz[0])
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for j in pivots:
        assert sum(1 for row in red if row[j] % p) == 1
    assert rk == linalg.rank(m, f) == len(pivots) == oracles.mod_rank(rows, p)


def test_solve_left():
    a = to_obj([[1, 2], [3, 4]], QQ)
    b = to_obj([[5, 6]], QQ)
    x = linalg.solve_left(a, b, QQ)
    assert np.all(x.dot(a) == b)


def test_kernels_match_python():
    rng = np.random.default_rng(7)
    for p in (2, 3, 101):
        for _ in range(5):
            a = rng.integers(0, p, size=(6, 6))
            b = rng.integers(0, p, size=(6, 6))
            assert kernels.matmul_mod(a, b, p).tolist() == oracles.mod_matmul(a.tolist(), b.tolist(), p)
            want = np.eye(6, dtype=np.int64)
            for _ in range(5):
                want = np.array(oracles.mod_matmul(want.tolist(), a.tolist(), p))
            assert kernels.matpow_mod(a, 5, p).tolist() == want.tolist()
            r1, m1 = kernels._rref_mod_np(a.copy(), p)
            r2, m2 = kernels.rref_mod(a, p)
            assert r1 == r2 == oracles.mod_rank(a.tolist(), p)
            assert np.array_equal(m1, m2)
            assert np.array_equal(kernels._matmul_mod_np(a, b, p), kernels.matmul_mod(a, b, p))


def test_kernel_rejects_large_prime():
    with pytest.raises(ValueError):
        kernels.matmul_mod(np.eye(2, dtype=np.int64), np.eye(2, dtype=np.int64), (1 << 31) - 1)

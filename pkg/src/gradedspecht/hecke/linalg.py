"""Exact dense linear algebra over Q or F_p.

Rational matrices are cleared of denominators and reduced with fraction-free
(Bareiss) Gauss-Jordan elimination on gmpy2 integers. Prime-field matrices go
through the int64 kernels in :mod:`kernels`.
"""

from __future__ import annotations

import gmpy2
import numpy as np

from . import kernels
from .scalars import GF, ScalarField

__all__ = ["to_int_mod", "from_int_mod", "rank", "rref", "inverse", "solve_left", "identity", "zeros", "matmul"]


def zeros(shape, field: ScalarField):
    out = np.empty(shape, dtype=object)
    out.fill(field.zero)
    return out


def identity(n: int, field: ScalarField):
    out = zeros((n, n), field)
    for i in range(n):
        out[i, i] = field.one
    return out


def to_int_mod(m, p: int):
    return np.array([[int(x) for x in row] for row in m], dtype=np.int64).reshape(m.shape) % p


def from_int_mod(a, p: int):
    out = np.empty(a.shape, dtype=object)
    flat = out.reshape(-1)
    for k, x in enumerate(a.reshape(-1)):
        flat[k] = GF(int(x), p)
    return out


def matmul(a, b, field: ScalarField):
    if field.p is not None:
        return from_int_mod(kernels.matmul_mod(to_int_mod(a, field.p), to_int_mod(b, field.p), field.p), field.p)
    return a.dot(b)


def _integer_rows(m):
    """Scale each row by the lcm of its denominators."""
    rows = []
    for row in m:
        qs = [gmpy2.mpq(x) for x in row]
        den = gmpy2.mpz(1)
        for q in qs:
            den = gmpy2.lcm(den, q.denominator)
        rows.append([q.numerator * (den // q.denominator) for q in qs])
    return rows


def _bareiss_gauss_jordan(a):
    """Fraction-free Gauss-Jordan on an integer row list, in place.

    Every division is exact. Returns (pivot columns, final pivot value); each
    pivot row then has the pivot value d in its pivot column and zeros in the
    other pivot columns.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = gmpy2.mpz(1)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((k for k in range(r, rows) if a[k][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for k in range(rows):
            if k == r:
                continue
            row = a[k]
            f = row[c]
            a[k] = [gmpy2.divexact(pv * row[j] - f * pr[j], prev) for j in range(cols)]
        prev = pv
        pivots.append(c)
        r += 1
    return pivots, prev


def rref(m, field: ScalarField):
    """Return (rank, reduced row echelon form) as an object array."""
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0, m.copy()
    if field.p is not None:
        rk, red = kernels.rref_mod(to_int_mod(m, field.p), field.p)
        return int(rk), from_int_mod(red, field.p)
    a = _integer_rows(m)
    pivots, _ = _bareiss_gauss_jordan(a)
    out = zeros(m.shape, field)
    for r, c in enumerate(pivots):
        d = a[r][c]
        out[r] = [gmpy2.mpq(x, d) for x in a[r]]
    return len(pivots), out


def rank(m, field: ScalarField) -> int:
    return rref(m, field)[0]


def inverse(m, field: ScalarField):
    m = np.asarray(m, dtype=object)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    aug = np.concatenate([m, identity(n, field)], axis=1)
    rk, red = rref(aug, field)
    if rk < n or any(red[i, i] != field.one for i in range(n)) or any(
        red[i, j] != field.zero for i in range(n) for j in range(n) if i != j
    ):
        raise ZeroDivisionError("matrix is singular")
    return red[:, n:].copy()


def solve_left(a, b, field: ScalarField):
    """Solve x a = b for x, raising ValueError when b is outside the row space."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    single = b.ndim == 1
    if single:
        b = b.reshape(1, -1)
    # x a = b  <=>  a^T x^T = b^T
    at = a.T
    k = at.shape[1]
    aug = np.concatenate([at, b.T], axis=1)
    rk, red = rref(aug, field)
    pivots = []
    for r in range(rk):
        c = next(j for j in range(aug.shape[1]) if red[r, j] != field.zero)
        if c >= k:
            raise ValueError("no solution")
        pivots.append(c)
    x = zeros((b.shape[0], k), field)
    for r, c in enumerate(pivots):
        x[:, c] = red[r, k:]
    return x[0] if single else x

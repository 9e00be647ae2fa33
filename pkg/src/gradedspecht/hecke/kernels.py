"""Dense matrix kernels over F_p on int64 arrays.

The numba versions are used by default. Setting ``GRADEDSPECHT_PURE_NUMPY=1``
selects the pure numpy fallbacks, which compute the same results.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["USE_NUMBA", "matmul_mod", "matpow_mod", "rref_mod", "backend_name"]

_MAX_P = 1 << 20

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("GRADEDSPECHT_PURE_NUMPY", "").lower() not in ("1", "true", "yes")


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _matmul_mod_np(a, b, p):
    return (a @ b) % p


def _rref_mod_np(a, p):
    m = a.copy() % p
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        factors = m[:, col].copy()
        factors[rank] = 0
        m = (m - np.outer(factors, m[rank])) % p
        rank += 1
    return rank, m


if numba is not None:

    @njit(cache=True)
    def _matmul_mod_nb(a, b, p):
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for t in range(k):
                x = a[i, t]
                if x == 0:
                    continue
                for j in range(m):
                    out[i, j] = (out[i, j] + x * b[t, j]) % p
        return out

    @njit(cache=True)
    def _inv_mod_nb(x, p):
        # Fermat inverse by square-and-multiply
        result = 1
        base = x % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result

    @njit(cache=True)
    def _rref_mod_nb(a, p):
        m = a.copy() % p
        rows, cols = m.shape
        rank = 0
        for col in range(cols):
            if rank == rows:
                break
            piv = -1
            for r in range(rank, rows):
                if m[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(cols):
                    tmp = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = tmp
            inv = _inv_mod_nb(m[rank, col], p)
            for j in range(cols):
                m[rank, j] = (m[rank, j] * inv) % p
            for r in range(rows):
                if r != rank and m[r, col] != 0:
                    f = m[r, col]
                    for j in range(cols):
                        m[r, j] = (m[r, j] - f * m[rank, j]) % p
            rank += 1
        return rank, m


def _check(a, p):
    if p >= _MAX_P:
        raise ValueError(f"prime {p} too large for int64 kernels")
    return np.ascontiguousarray(a, dtype=np.int64) % p


def matmul_mod(a, b, p: int):
    a, b = _check(a, p), _check(b, p)
    if USE_NUMBA:
        return _matmul_mod_nb(a, b, p)
    return _matmul_mod_np(a, b, p)


def matpow_mod(a, e: int, p: int):
    """a**e mod p by repeated squaring."""
    a = _check(a, p)
    result = np.eye(a.shape[0], dtype=np.int64)
    while e > 0:
        if e & 1:
            result = matmul_mod(result, a, p)
        a = matmul_mod(a, a, p)
        e >>= 1
    return result


def rref_mod(a, p: int):
    """Reduced row echelon form mod p; returns (rank, matrix)."""
    a = _check(a, p)
    if USE_NUMBA:
        return _rref_mod_nb(a, p)
    return _rref_mod_np(a, p)

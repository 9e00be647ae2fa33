"""KLR idempotents e(i), nilpotents y_r and block idempotents over F_p.

With xi = 1 over F_p the eigenvalues of every L_k lie in F_p = I. On the
regular representation, (R(L_k) - c)^N vanishes on the generalized
c-eigenspace once N >= dim, and (c' - c)^N = 1 for c' != c as soon as
(p - 1) divides N. Taking N = p^s (p - 1) with p^s >= dim therefore makes
I - (R(L_k) - c)^N the exact projection onto the generalized c-eigenspace,
and e(i) is the product of these projections over k.

All matrix work uses the int64 kernels of :mod:`kernels`.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from ..combinatorics import (
    BlockLabel,
    block_of,
    block_of_residues,
    enumerate_multipartitions,
    enumerate_std,
    residue_sequence,
)
from . import kernels, linalg
from .algebra import HeckeAlgebra, HeckeElement, HeckeParams
from .bases import Report

__all__ = ["KLRData", "klr_idempotents", "klr_y", "block_idempotents", "verify_klr"]


def projection_exponent(p: int, dim: int) -> int:
    q = 1
    while q < dim:
        q *= p
    return q * (p - 1)


class KLRData:
    def __init__(self, algebra: HeckeAlgebra):
        params = algebra.params
        if params.p is None or not params.is_degenerate:
            raise ValueError("KLR idempotents need xi = 1 over a prime field")
        self.alg = algebra
        self.params = params
        self.p = params.p
        self.n = params.n
        self.dim = algebra.dim
        self.exponent = projection_exponent(self.p, self.dim)
        self.quiver = params.quiver()

    def _int(self, m):
        return linalg.to_int_mod(m, self.p)

    @cached_property
    def eye(self):
        return np.eye(self.dim, dtype=np.int64)

    @cached_property
    def L(self):
        return {k: self._int(self.alg.generator_matrix("L", k)) for k in range(1, self.n + 1)}

    @cached_property
    def T(self):
        return {i: self._int(self.alg.generator_matrix("T", i)) for i in range(1, self.n)}

    @cached_property
    def projections(self):
        out = {}
        for k in range(1, self.n + 1):
            for c in range(self.p):
                shifted = (self.L[k] - c * self.eye) % self.p
                out[(k, c)] = (self.eye - kernels.matpow_mod(shifted, self.exponent, self.p)) % self.p
        return out

    @cached_property
    def idempotent_matrices(self) -> dict:
        """R(e(i)) for every i in I^n, including the zero ones."""
        out = {}
        for seq in itertools.product(range(self.p), repeat=self.n):
            m = self.eye
            for k, c in enumerate(seq, start=1):
                m = kernels.matmul_mod(m, self.projections[(k, c)], self.p)
            out[seq] = m
        return out

    def element(self, m) -> HeckeElement:
        return self.alg.element_of_matrix(linalg.from_int_mod(m, self.p))

    def idempotents(self) -> dict:
        return {seq: self.element(m) for seq, m in self.idempotent_matrices.items()}

    @cached_property
    def y_matrices(self) -> dict:
        out = {}
        for r in range(1, self.n + 1):
            y = np.zeros((self.dim, self.dim), dtype=np.int64)
            for seq, e in self.idempotent_matrices.items():
                if not e.any():
                    continue
                shifted = (self.L[r] - seq[r - 1] * self.eye) % self.p
                y = (y + kernels.matmul_mod(shifted, e, self.p)) % self.p
            out[r] = y
        return out

    @cached_property
    def block_matrices(self) -> dict:
        out = {}
        for seq, e in self.idempotent_matrices.items():
            label = block_of_residues(seq)
            out[label] = (out.get(label, np.zeros_like(e)) + e) % self.p
        return out

    @cached_property
    def tableau_residues(self) -> set:
        seqs = set()
        for mu in enumerate_multipartitions(self.n, self.params.level):
            for t in enumerate_std(mu):
                seqs.add(tuple(residue_sequence(t, self.quiver)))
        return seqs


def klr_idempotents(params: HeckeParams, algebra: HeckeAlgebra | None = None) -> dict:
    """e(i) for every i in I^n; zero when the eigenspace is zero."""
    return KLRData(algebra or HeckeAlgebra(params)).idempotents()


def klr_y(r: int, params: HeckeParams, algebra: HeckeAlgebra | None = None) -> HeckeElement:
    data = KLRData(algebra or HeckeAlgebra(params))
    return data.element(data.y_matrices[r])


def block_idempotents(params: HeckeParams, algebra: HeckeAlgebra | None = None) -> dict:
    data = KLRData(algebra or HeckeAlgebra(params))
    return {label: data.element(m) for label, m in data.block_matrices.items() if m.any()}


def verify_klr(params: HeckeParams, algebra: HeckeAlgebra | None = None) -> Report:
    data = KLRData(algebra or HeckeAlgebra(params))
    p = data.p
    mm = lambda a, b: kernels.matmul_mod(a, b, p)
    rep = Report("klr", params.to_dict())
    rep.extra = {"exponent": data.exponent, "backend": kernels.backend_name()}

    def check(name, ok, **info):
        rep.checked += 1
        if not ok:
            rep.violations.append(dict(check=name, **info))

    E = data.idempotent_matrices
    nonzero = {seq for seq, m in E.items() if m.any()}
    total = sum(E.values()) % p
    check("sum-to-one", np.array_equal(total, data.eye))
    for a, ma in E.items():
        for b, mb in E.items():
            prod = mm(ma, mb)
            expected = ma if a == b else np.zeros_like(ma)
            check("orthogonal-idempotents", np.array_equal(prod, expected), i=list(a), j=list(b))
    check("nonzero-iff-tableau-residue", nonzero == data.tableau_residues,
          nonzero=sorted(map(list, nonzero)), expected=sorted(map(list, data.tableau_residues)))

    for r, y in data.y_matrices.items():
        check("y-nilpotent", not kernels.matpow_mod(y, data.dim, p).any(), r=r)
        for seq in nonzero:
            check("y-commutes-with-e", np.array_equal(mm(y, E[seq]), mm(E[seq], y)), r=r, i=list(seq))
    y1 = data.y_matrices[1]
    for seq in nonzero:
        power = data.quiver.weight_pairing(seq[0])
        check("y1-cyclotomic", not mm(kernels.matpow_mod(y1, power, p), E[seq]).any(), i=list(seq))

    blocks = {label: m for label, m in data.block_matrices.items() if m.any()}
    gens = list(data.T.values()) + list(data.L.values())
    for label, m in blocks.items():
        for g in gens:
            check("block-central", np.array_equal(mm(m, g), mm(g, m)), block=label.to_list())
    check("blocks-sum-to-one", np.array_equal(sum(blocks.values()) % p, data.eye))
    expected = {block_of(mu, data.quiver) for mu in enumerate_multipartitions(data.n, params.level)}
    check("blocks-match-shapes", set(blocks) == expected,
          blocks=sorted(b.to_list() for b in blocks), expected=sorted(b.to_list() for b in expected))
    rep.extra.update({"nonzero_idempotents": len(nonzero), "blocks": len(blocks)})
    return rep

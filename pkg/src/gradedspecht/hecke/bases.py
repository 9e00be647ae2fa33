"""Murphy bases, seminormal bases and the checks that compare them.

Everything here is indexed by the pairs (s, t) of same-shape standard
tableaux, ordered by shape (most dominant first, as in
``enumerate_multipartitions``) and then by ``enumerate_std``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..combinatorics import (
    Multipartition,
    StandardTableau,
    comp_leq,
    dominates,
    enumerate_multipartitions,
    enumerate_std,
    initial_tableau,
    strong_dominates,
    tableau_dominates,
)
from ..symmetric import Permutation, length, tableau_permutation
from . import linalg
from .algebra import HeckeAlgebra, HeckeElement, SemisimplicityError

__all__ = ["Report", "CellularBases", "young_subgroup"]


@dataclass
class Report:
    suite: str
    params: dict
    checked: int = 0
    violations: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.violations.extend(other.violations)
        for k, v in other.extra.items():
            self.extra[k] = self.extra.get(k, 0) + v if isinstance(v, int) else v
        return self

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "params": self.params, "checked": self.checked, "violations": self.violations}
        if self.extra:
            out["extra"] = self.extra
        return out


def young_subgroup(lam: Multipartition) -> list[Permutation]:
    """Permutations of 1..n stabilising every row of t^lam."""
    top = initial_tableau(lam)
    blocks = [row for comp in top.rows for row in comp if len(row) > 1]
    n = lam.n
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        imgs = list(range(1, n + 1))
        for block, perm in zip(blocks, choice):
            for a, b in zip(block, perm):
                imgs[a - 1] = b
        out.append(Permutation(tuple(imgs)))
    return out


def _pair_label(pair) -> list:
    s, t = pair
    return [s.to_list(), t.to_list()]


class CellularBases:
    """The m-, n-, f- and g-bases of one algebra, built on demand."""

    def __init__(self, algebra: HeckeAlgebra):
        self.alg = algebra
        self.params = algebra.params
        self.field = algebra.field
        n, l = self.params.n, self.params.level
        self.shapes = enumerate_multipartitions(n, l)
        self.std = {mu: enumerate_std(mu) for mu in self.shapes}
        self.tableaux = [t for mu in self.shapes for t in self.std[mu]]
        self.pairs = [(s, t) for mu in self.shapes for s in self.std[mu] for t in self.std[mu]]
        self.pair_index = {p: i for i, p in enumerate(self.pairs)}

    # Murphy bases

    def _times_linear_factors(self, a: HeckeElement, factors) -> HeckeElement:
        for m, q in factors:
            a = self.alg.act(a, "L", m) - a * q
        return a

    def u_plus(self, lam: Multipartition) -> HeckeElement:
        Q = self.params.charges
        sizes = lam.sizes()
        factors = [(m, Q[k - 1]) for k in range(2, lam.level + 1) for m in range(1, sum(sizes[: k - 1]) + 1)]
        return self._times_linear_factors(self.alg.one(), factors)

    def u_minus(self, lam: Multipartition) -> HeckeElement:
        # upper limit |lam^(1)| + ... + |lam^(l-k)|, the mirror image of u_plus
        Q = self.params.charges
        sizes = lam.sizes()
        l = lam.level
        factors = [(m, Q[k - 1]) for k in range(1, l) for m in range(1, sum(sizes[: l - k]) + 1)]
        return self._times_linear_factors(self.alg.one(), factors)

    def x_sum(self, lam: Multipartition) -> HeckeElement:
        out = self.alg.zero()
        for w in young_subgroup(lam):
            out = out + self.alg.T(w)
        return out

    def y_sum(self, lam: Multipartition) -> HeckeElement:
        out = self.alg.zero()
        mxi = -self.params.xi_scalar
        for w in young_subgroup(lam):
            out = out + self.alg.T(w) * (self.field.one / mxi ** length(w))
        return out

    def murphy_m(self, lam: Multipartition) -> HeckeElement:
        return self._murphy(lam, "m")

    def murphy_n(self, lam: Multipartition) -> HeckeElement:
        return self._murphy(lam, "n")

    @cached_property
    def _murphy_cache(self):
        return {}

    def _murphy(self, lam, kind):
        key = (lam, kind)
        if key not in self._murphy_cache:
            if lam.n != self.params.n or lam.level != self.params.level:
                raise ValueError(f"shape {lam} does not match n={self.params.n}, level={self.params.level}")
            u = self.u_plus(lam) if kind == "m" else self.u_minus(lam)
            x = self.x_sum(lam) if kind == "m" else self.y_sum(lam)
            ux, xu = u * x, x * u
            assert ux == xu, f"{kind}-symmetriser does not commute with its charge polynomial"
            self._murphy_cache[key] = ux
        return self._murphy_cache[key]

    def _check_pair(self, s: StandardTableau, t: StandardTableau):
        if s.shape != t.shape:
            raise ValueError(f"{s} and {t} have different shapes")

    def m_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        self._check_pair(s, t)
        return self._cellular(s, t, self.murphy_m(s.shape))

    def n_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        self._check_pair(s, t)
        return self._cellular(s, t, self.murphy_n(s.shape))

    def _cellular(self, s, t, core):
        a = self.alg.act_T(core, tableau_permutation(t), "right")
        return self.alg.act_T(a, tableau_permutation(s).inverse(), "left")

    @cached_property
    def m_matrix(self):
        return self.alg.matrix_of_elements([self.m_st(s, t) for s, t in self.pairs])

    @cached_property
    def n_matrix(self):
        return self.alg.matrix_of_elements([self.n_st(s, t) for s, t in self.pairs])

    @cached_property
    def m_inverse(self):
        return linalg.inverse(self.m_matrix, self.field)

    @cached_property
    def n_inverse(self):
        return linalg.inverse(self.n_matrix, self.field)

    def to_m_coordinates(self, a: HeckeElement):
        x = a.vec.dot(self.m_inverse)
        if not np.all(x.dot(self.m_matrix) == a.vec):
            raise ArithmeticError("m-basis solve left a residual")
        return x

    def to_n_coordinates(self, a: HeckeElement):
        x = a.vec.dot(self.n_inverse)
        if not np.all(x.dot(self.n_matrix) == a.vec):
            raise ArithmeticError("n-basis solve left a residual")
        return x

    def from_m_coordinates(self, x) -> HeckeElement:
        return self.alg.from_vector(np.asarray(x, dtype=object).dot(self.m_matrix))

    # seminormal bases

    def content(self, t: StandardTableau, k: int):
        return self.params.content(t, k)

    @cached_property
    def content_sets(self):
        """For each k the distinct values cont_t(k) over all standard t."""
        self.params.check_semisimple()
        out = []
        for k in range(1, self.params.n + 1):
            vals = []
            for t in self.tableaux:
                c = self.content(t, k)
                if c not in vals:
                    vals.append(c)
            out.append(vals)
        return out

    def _require_semisimple(self):
        if self.field.p is not None:
            raise SemisimplicityError("seminormal bases need rational scalars")
        self.content_sets

    def _F_factors(self, t: StandardTableau, distinct: bool = True):
        self._require_semisimple()
        factors = []
        for k in range(1, self.params.n + 1):
            ct = self.content(t, k)
            values = self.content_sets[k - 1] if distinct else [self.content(s, k) for s in self.tableaux]
            for c in values:
                if c != ct:
                    factors.append((k, c, ct - c))
        return factors

    def _apply_F(self, a: HeckeElement, t: StandardTableau, side: str, distinct: bool = True) -> HeckeElement:
        for k, c, d in self._F_factors(t, distinct):
            a = (self.alg.act(a, "L", k, side) - a * c) * (self.field.one / d)
        return a

    def seminormal_F(self, t: StandardTableau, distinct: bool = True) -> HeckeElement:
        """F_t; ``distinct=False`` repeats each factor once per tableau."""
        return self._apply_F(self.alg.one(), t, "right", distinct)

    def f_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        a = self._apply_F(self.m_st(s, t), t, "right")
        return self._apply_F(a, s, "left")

    def g_uv(self, u: StandardTableau, v: StandardTableau) -> HeckeElement:
        a = self._apply_F(self.n_st(u, v), v.conjugate(), "right")
        return self._apply_F(a, u.conjugate(), "left")

    @cached_property
    def f_matrix(self):
        return self.alg.matrix_of_elements([self.f_st(s, t) for s, t in self.pairs])

    @cached_property
    def f_inverse(self):
        return linalg.inverse(self.f_matrix, self.field)

    def to_f_coordinates(self, a: HeckeElement):
        return a.vec.dot(self.f_inverse)

    def transition_m_to_f(self):
        """A with m_st = sum_uv A[st, uv] f_uv."""
        return self.m_matrix.dot(self.f_inverse)

    def transition_f_to_m(self):
        """B with f_st = sum_uv B[st, uv] m_uv."""
        return self.f_matrix.dot(self.m_inverse)

    # verification suites

    def _report(self, suite):
        return Report(suite, self.params.to_dict())

    def verify_eigenvectors(self) -> Report:
        rep = self._report("eigenvectors")
        for (u, v), row in zip(self.pairs, self.f_matrix):
            f = self.alg.from_vector(row)
            for k in range(1, self.params.n + 1):
                rep.checked += 1
                if not self.alg.act(f, "L", k) == f * self.content(v, k):
                    rep.violations.append({"pair": _pair_label((u, v)), "k": k})
        return rep

    def _triangular(self, rep, mat, what):
        z, one = self.field.zero, self.field.one
        for i, st in enumerate(self.pairs):
            for j, uv in enumerate(self.pairs):
                c = mat[i, j]
                rep.checked += 1
                if i == j:
                    if c != one:
                        rep.violations.append({"matrix": what, "pair": _pair_label(st), "diagonal": self.field.fmt(c)})
                elif c != z and not strong_dominates(uv, st):
                    rep.violations.append(
                        {"matrix": what, "row": _pair_label(st), "col": _pair_label(uv), "value": self.field.fmt(c)}
                    )

    def verify_strong_dominance(self) -> Report:
        rep = self._report("strong")
        self._triangular(rep, self.transition_m_to_f(), "m_to_f")
        self._triangular(rep, self.transition_f_to_m(), "f_to_m")
        return rep.merge(self.verify_eigenvectors())

    def verify_product_vanishing(self) -> Report:
        rep = self._report("tilting")
        z = self.field.zero
        nonzero = 0
        m_mat, n_mat = self.m_matrix, self.n_matrix
        for j, (u, v) in enumerate(self.pairs):
            prods = m_mat.dot(self.alg.right_matrix(self.alg.from_vector(n_mat[j])))
            uc = u.conjugate()
            for i, (s, t) in enumerate(self.pairs):
                rep.checked += 1
                if not any(c != z for c in prods[i]):
                    continue
                nonzero += 1
                if not tableau_dominates(uc, t):
                    rep.violations.append({"product": "m*n", "st": _pair_label((s, t)), "uv": _pair_label((u, v))})
        for i, (s, t) in enumerate(self.pairs):
            prods = n_mat.dot(self.alg.right_matrix(self.alg.from_vector(m_mat[i])))
            for j, (u, v) in enumerate(self.pairs):
                rep.checked += 1
                if not any(c != z for c in prods[j]):
                    continue
                nonzero += 1
                if not tableau_dominates(v.conjugate(), s):
                    rep.violations.append({"product": "n*m", "st": _pair_label((s, t)), "uv": _pair_label((u, v))})
        rep.extra = {"nonzero_products": nonzero}
        return rep

    def verify_Lk_action(self) -> Report:
        rep = self._report("lk-action")
        z = self.field.zero
        for basis in ("m", "n"):
            mat = self.m_matrix if basis == "m" else self.n_matrix
            inv = self.m_inverse if basis == "m" else self.n_inverse
            for i, (s, t) in enumerate(self.pairs):
                a = self.alg.from_vector(mat[i])
                lead_tab = t if basis == "m" else t.conjugate()
                for k in range(1, self.params.n + 1):
                    x = self.alg.act(a, "L", k).vec.dot(inv)
                    rep.checked += 1
                    expected = self.content(lead_tab, k)
                    if x[i] != expected:
                        rep.violations.append(
                            {"basis": basis, "pair": _pair_label((s, t)), "k": k, "leading": self.field.fmt(x[i])}
                        )
                    for j, uv in enumerate(self.pairs):
                        if j != i and x[j] != z and not strong_dominates(uv, (s, t)):
                            rep.violations.append(
                                {"basis": basis, "pair": _pair_label((s, t)), "k": k, "term": _pair_label(uv)}
                            )
        return rep

    def murphy_m_composition(self, lam: Multipartition) -> HeckeElement:
        """m_lam = u^+ x_lam for a multicomposition (row-standard shape)."""
        return self._murphy(lam, "m")

    def verify_mlambda_expansion(self, lam: Multipartition) -> Report:
        """Expand m_lam in the f-basis and test the support conditions.

        Counted as violations: the component bounds, the condition that two
        entries in one row of t^lam lie in different columns of u and of v,
        and for multipartitions the strong-dominance cone above
        (t^lam, t^lam). The reading keyed to columns of t^lam is reported in
        ``extra`` without being counted.
        """
        rep = self._report("mlambda")
        rep.params = dict(rep.params, shape=lam.to_list())
        top = initial_tableau(lam)
        coords = self.to_f_coordinates(self.murphy_m_composition(lam))
        z = self.field.zero
        n = self.params.n
        row_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if _same_row(top, i, j)]
        col_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if _same_col(top, i, j)]
        literal_fail = 0
        support = 0
        for idx, (u, v) in enumerate(self.pairs):
            if coords[idx] == z:
                continue
            support += 1
            rep.checked += 1
            label = _pair_label((u, v))
            if not (comp_leq(u, top) and comp_leq(v, top)):
                rep.violations.append({"condition": "comp", "pair": label})
            if any(_same_col(x, i, j) for x in (u, v) for i, j in row_pairs):
                rep.violations.append({"condition": "rows-of-t-lambda", "pair": label})
            if any(_same_col(x, i, j) for x in (u, v) for i, j in col_pairs):
                literal_fail += 1
            if not lam.relaxed and not strong_dominates((u, v), (top, top)):
                rep.violations.append({"condition": "cone", "pair": label})
        rep.extra = {"support": support, "columns_of_t_lambda_reading_failures": literal_fail}
        return rep

    def specht_cell_action(self, mu: Multipartition, kind: str, i: int):
        """Matrix of T_i or L_i on the cell module of mu, row t = image of m_{t^mu t}."""
        std = self.std[mu]
        top = std[0]
        z = self.field.zero
        out = linalg.zeros((len(std), len(std)), self.field)
        for r, t in enumerate(std):
            a = self.alg.act(self.m_st(top, t), kind, i)
            x = self.to_m_coordinates(a)
            for j, (u, v) in enumerate(self.pairs):
                if x[j] == z:
                    continue
                if u.shape == mu:
                    if u != top:
                        raise ArithmeticError(f"cell action leaked into row {u}")
                    out[r, std.index(v)] = x[j]
                elif not (dominates(u.shape, mu) and u.shape != mu):
                    raise ArithmeticError(f"cell action leaked into shape {u.shape}")
        return out


def _same_row(t, a, b):
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.row) == (y.comp, y.row)


def _same_col(t, a, b):
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.col) == (y.comp, y.col)

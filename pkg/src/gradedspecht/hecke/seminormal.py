"""Seminormal matrix model of the semisimple algebra.

Each irreducible module has basis Std(lam) and the generators act on the
right by explicit formulas in the contents. L_k is diagonal with entries
cont_v(k). For T_i: if i, i+1 share a row of v then v T_i = xi v; if they
share a column then v T_i = -v; otherwise, with t = v s_i, v dominating t,
c_v = cont_v(i) and c_t = cont_v(i+1),

    v T_i = (xi - 1) c_t / (c_t - c_v) v + t
    t T_i = (xi c_v - c_t)(c_v - xi c_t) / (c_v - c_t)^2 v + (xi - 1) c_v / (c_v - c_t) t.

When xi = 1 the contents are additive and the same block becomes
v T_i = v / (c_t - c_v) + t and t T_i = (1 - 1/(c_t - c_v)^2) v + t / (c_v - c_t).

Nothing here touches the rewriting engine, so comparing the two is a real
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..combinatorics import Multipartition, StandardTableau, enumerate_multipartitions, enumerate_std, tableau_dominates
from ..symmetric import Permutation, reduced_expression
from . import linalg
from .algebra import HeckeAlgebra, HeckeParams, SemisimplicityError
from .bases import Report

__all__ = ["SeminormalModel", "seminormal_model", "verify_cross_model"]


@dataclass
class SeminormalModel:
    params: HeckeParams
    blocks: dict  # shape -> (tableaux, {("T", i) | ("L", k): matrix})

    def matrix(self, mu: Multipartition, kind: str, i: int):
        return self.blocks[mu][1][(kind, i)]

    def word(self, mu: Multipartition, exponents, images):
        """Matrix of L^a T_w on the module of mu."""
        fld = self.params.field
        tabs, mats = self.blocks[mu]
        out = linalg.identity(len(tabs), fld)
        for k, a in enumerate(exponents, start=1):
            for _ in range(a):
                out = out.dot(mats[("L", k)])
        for i in reduced_expression(Permutation(tuple(images))):
            out = out.dot(mats[("T", i)])
        return out

    def regular_trace(self, exponents, images):
        """sum over lam of |Std(lam)| * trace on the module of lam."""
        total = self.params.field.zero
        for mu, (tabs, _) in self.blocks.items():
            m = self.word(mu, exponents, images)
            total = total + len(tabs) * sum(m[j, j] for j in range(len(tabs)))
        return total


def _swap(t: StandardTableau, i: int) -> StandardTableau | None:
    imgs = list(range(1, t.n + 1))
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    try:
        return t.act(imgs)
    except ValueError:
        return None


def seminormal_model(params: HeckeParams) -> SeminormalModel:
    if params.p is not None:
        raise SemisimplicityError("the seminormal model needs rational scalars")
    params.check_semisimple()
    fld = params.field
    xi = params.xi_scalar
    one = fld.one
    degenerate = params.is_degenerate
    blocks = {}
    for mu in enumerate_multipartitions(params.n, params.level):
        tabs = enumerate_std(mu)
        pos = {t: j for j, t in enumerate(tabs)}
        d = len(tabs)
        mats = {}
        for k in range(1, params.n + 1):
            m = linalg.zeros((d, d), fld)
            for j, t in enumerate(tabs):
                m[j, j] = params.content(t, k)
            mats[("L", k)] = m
        for i in range(1, params.n):
            m = linalg.zeros((d, d), fld)
            for j, v in enumerate(tabs):
                a, b = v.node_of(i), v.node_of(i + 1)
                if (a.comp, a.row) == (b.comp, b.row):
                    m[j, j] = xi
                    continue
                if (a.comp, a.col) == (b.comp, b.col):
                    m[j, j] = -one
                    continue
                t = _swap(v, i)
                jt = pos[t]
                if tableau_dominates(v, t):
                    cv, ct = params.content(v, i), params.content(v, i + 1)
                    m[j, jt] = one
                    if degenerate:
                        m[j, j] = one / (ct - cv)
                    else:
                        m[j, j] = (xi - 1) * ct / (ct - cv)
                else:
                    # v is the lower tableau; its partner t dominates
                    cv, ct = params.content(t, i), params.content(t, i + 1)
                    if degenerate:
                        m[j, jt] = one - one / (ct - cv) ** 2
                        m[j, j] = one / (cv - ct)
                    else:
                        m[j, jt] = (xi * cv - ct) * (cv - xi * ct) / (cv - ct) ** 2
                        m[j, j] = (xi - 1) * cv / (cv - ct)
            mats[("T", i)] = m
        blocks[mu] = (tabs, mats)
    return SeminormalModel(params, blocks)


def _eq(a, b) -> bool:
    return bool(np.all(a == b))


def verify_model_relations(model: SeminormalModel) -> Report:
    """The defining relations of the algebra, as matrix identities."""
    params = model.params
    fld = params.field
    xi = params.xi_scalar
    delta = fld.one if params.is_degenerate else fld.zero
    n = params.n
    rep = Report("model-relations", params.to_dict())

    def check(name, ok):
        rep.checked += 1
        if not ok:
            rep.violations.append({"relation": name, "shape": str(mu)})

    for mu, (tabs, mats) in model.blocks.items():
        d = len(tabs)
        eye = linalg.identity(d, fld)
        T = {i: mats[("T", i)] for i in range(1, n)}
        L = {k: mats[("L", k)] for k in range(1, n + 1)}
        prod = eye
        for q in params.charges:
            prod = prod.dot(L[1] - eye * q)
        check("cyclotomic", _eq(prod, linalg.zeros((d, d), fld)))
        for i in range(1, n):
            check(f"quadratic T{i}", _eq((T[i] + eye).dot(T[i] - eye * xi), linalg.zeros((d, d), fld)))
            lhs = T[i].dot(L[i]) + eye * delta
            rhs = L[i + 1].dot(T[i] - eye * xi + eye)
            check(f"T{i}L{i}", _eq(lhs, rhs))
            for k in range(1, n + 1):
                if k not in (i, i + 1):
                    check(f"T{i}L{k}", _eq(T[i].dot(L[k]), L[k].dot(T[i])))
            for j in range(i + 1, n):
                if j == i + 1:
                    check(f"braid {i}", _eq(T[i].dot(T[j]).dot(T[i]), T[j].dot(T[i]).dot(T[j])))
                else:
                    check(f"commute T{i}T{j}", _eq(T[i].dot(T[j]), T[j].dot(T[i])))
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                check(f"L{a}L{b}", _eq(L[a].dot(L[b]), L[b].dot(L[a])))
    return rep


def verify_cross_model(params: HeckeParams, algebra: HeckeAlgebra | None = None, all_words: bool = True) -> Report:
    """Model relations plus trace agreement with the engine's regular representation."""
    model = seminormal_model(params)
    rep = Report("cross-model", params.to_dict())
    rep.merge(verify_model_relations(model))
    alg = algebra or HeckeAlgebra(params)
    fld = params.field
    ident = (0,) * params.n
    for idx, word in enumerate(alg.words):
        if not all_words and word.exponents != ident:
            continue
        m = alg.word_matrix(idx)
        engine = sum((m[j, j] for j in range(alg.dim)), fld.zero)
        mod = model.regular_trace(word.exponents, word.perm)
        rep.checked += 1
        if engine != mod:
            rep.violations.append(
                {"word": [list(word.exponents), list(word.perm)], "engine": fld.fmt(engine), "model": fld.fmt(mod)}
            )
    return rep

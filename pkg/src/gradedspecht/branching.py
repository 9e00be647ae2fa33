"""Graded induction filtrations as shape-and-shift descriptors.

For a multipartition mu and residue i the induced graded Specht module has
layers indexed by the addable i-nodes of mu, read top to bottom; layer j is
the Specht module of mu + A_j shifted by d_{A_j}(mu). The dual filtration
reads the same nodes bottom to top with shifts d^{A}(mu).

>>> from gradedspecht.combinatorics import Multipartition, QuiverParams
>>> params = QuiverParams(e=2, multicharge=(0,))
>>> f = induction_filtration(Multipartition.from_list([[1]]), 1, params)
>>> [(str(layer.shape), layer.shift) for layer in f.layers]
[('(2)', 1), ('(1,1)', 0)]
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    LaurentIntPoly,
    Multipartition,
    Node,
    QuiverParams,
    StandardTableau,
    addable_nodes,
    block_of,
    codegree,
    d_above,
    d_below,
    defect,
    degree,
    dominates,
    final_tableau,
    graded_dim,
    removable_nodes,
)

__all__ = [
    "FiltrationLayer",
    "Filtration",
    "induction_filtration",
    "dual_induction_filtration",
    "graded_dim_induced",
    "extend_tableau",
    "check_degree_identity",
    "check_defect_shift_identity",
    "check_strictly_decreasing",
    "check_restriction_identity",
]


@dataclass(frozen=True)
class FiltrationLayer:
    shape: Multipartition
    shift: int
    node: Node

    def to_dict(self) -> dict:
        return {"shape": self.shape.to_list(), "shift": self.shift}


@dataclass(frozen=True)
class Filtration:
    source: Multipartition
    residue: int
    layers: tuple[FiltrationLayer, ...]

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_list(),
            "residue": self.residue,
            "layers": [layer.to_dict() for layer in self.layers],
        }


def check_strictly_decreasing(shapes) -> bool:
    """True when each shape strictly dominates the next."""
    return all(a != b and dominates(a, b) for a, b in zip(shapes, shapes[1:]))


def induction_filtration(mu: Multipartition, i: int, params: QuiverParams) -> Filtration:
    i = params.residue(i)
    layers = tuple(
        FiltrationLayer(mu.add_node(a), d_below(mu, a, params), a) for a in addable_nodes(mu, i, params)
    )
    assert check_strictly_decreasing([layer.shape for layer in layers])
    return Filtration(mu, i, layers)


def dual_induction_filtration(nu: Multipartition, i: int, params: QuiverParams) -> Filtration:
    i = params.residue(i)
    nodes = list(reversed(addable_nodes(nu, i, params)))
    layers = tuple(FiltrationLayer(nu.add_node(a), d_above(nu, a, params), a) for a in nodes)
    assert check_strictly_decreasing([layer.shape for layer in reversed(layers)])
    return Filtration(nu, i, layers)


def graded_dim_induced(mu: Multipartition, i: int, params: QuiverParams) -> LaurentIntPoly:
    total = LaurentIntPoly.zero()
    for layer in induction_filtration(mu, i, params).layers:
        total = total + graded_dim(layer.shape, params).shift(layer.shift)
    return total


def extend_tableau(t: StandardTableau, a: Node) -> StandardTableau:
    """Place n+1 at the addable node ``a`` of Shape(t)."""
    comps = [[list(r) for r in c] for c in t.rows]
    if not 1 <= a.comp <= len(comps):
        raise ValueError(f"{a} is not addable")
    comp = comps[a.comp - 1]
    if a.row > len(comp) + 1 or a.col != (len(comp[a.row - 1]) if a.row <= len(comp) else 0) + 1:
        raise ValueError(f"{a} is not addable")
    if a.row == len(comp) + 1:
        comp.append([])
    comp[a.row - 1].append(t.n + 1)
    return StandardTableau.from_list(comps)


def check_degree_identity(mu: Multipartition, i: int, params: QuiverParams) -> bool:
    """deg t^{alpha_j}_mu = deg t_mu + d_{A_j}(mu) for every layer."""
    t_mu = final_tableau(mu)
    base = degree(t_mu, params)
    for layer in induction_filtration(mu, i, params).layers:
        if degree(extend_tableau(t_mu, layer.node), params) != base + layer.shift:
            return False
    return True


def check_defect_shift_identity(mu: Multipartition, i: int, params: QuiverParams) -> bool:
    """2 codeg t_mu + deg t^{alpha_j}_mu = defect + codeg t_mu + d_{A_j}(mu) for every layer."""
    t_mu = final_tableau(mu)
    cod = codegree(t_mu, params)
    dft = defect(block_of(mu, params), params)
    for layer in induction_filtration(mu, i, params).layers:
        lhs = 2 * cod + degree(extend_tableau(t_mu, layer.node), params)
        if lhs != dft + cod + layer.shift:
            return False
    return True


def check_restriction_identity(lam: Multipartition, params: QuiverParams) -> bool:
    """graded_dim(lam) = sum over removable B of q^{d_B(lam - B)} graded_dim(lam - B)."""
    if lam.n == 0:
        return graded_dim(lam, params) == LaurentIntPoly.one()
    total = LaurentIntPoly.zero()
    for b in removable_nodes(lam, None, params):
        smaller = lam.remove_node(b)
        total = total + graded_dim(smaller, params).shift(d_below(smaller, b, params))
    return total == graded_dim(lam, params)

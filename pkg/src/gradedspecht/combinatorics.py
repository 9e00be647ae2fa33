"""Multipartitions, tableaux, dominance, residues and degree statistics.

Conventions
-----------
Nodes are 1-based triples ``(row, col, comp)``. A node ``A`` is *below* ``B``
when it lies in a later component, or in the same component and a later row.
Residues are ``col - row + kappa[comp]`` reduced mod ``e``; when ``e == 0`` they
are left as plain integers.

>>> params = QuiverParams(e=2, multicharge=(0,))
>>> mu = Multipartition.from_list([[1]])
>>> addable_nodes(mu, 1, params)
[Node(row=1, col=2, comp=1), Node(row=2, col=1, comp=1)]
>>> [degree(t, params) for t in enumerate_std(Multipartition.from_list([[2]]))]
[1]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Sequence

from .laurent import LaurentIntPoly

__all__ = [
    "QuiverParams",
    "Node",
    "Multipartition",
    "StandardTableau",
    "ResidueSequence",
    "BlockLabel",
    "LaurentIntPoly",
    "conjugate",
    "dominates",
    "tableau_dominates",
    "strong_dominates",
    "pair_dominates",
    "comp_leq",
    "enumerate_partitions",
    "enumerate_multipartitions",
    "enumerate_multicompositions",
    "enumerate_std",
    "enumerate_row_standard",
    "initial_tableau",
    "final_tableau",
    "node_residue",
    "is_below",
    "addable_nodes",
    "removable_nodes",
    "d_below",
    "d_above",
    "degree",
    "codegree",
    "residue_sequence",
    "block_of",
    "block_of_residues",
    "cartan_entry",
    "defect",
    "graded_dim",
]


def _reduce(x: int, e: int) -> int:
    return x % e if e else x


@dataclass(frozen=True)
class QuiverParams:
    """Quantum characteristic ``e`` and multicharge ``kappa``.

    The separation condition ``kappa_l - kappa_{l+1} >= n`` depends on the rank
    ``n``, so it is checked by :meth:`is_separated` rather than here.
    """

    e: int
    multicharge: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multicharge", tuple(int(k) for k in self.multicharge))
        if self.e < 0 or self.e == 1:
            raise ValueError(f"quantum characteristic must be 0 or >= 2, got {self.e}")
        if not self.multicharge:
            raise ValueError("multicharge must have at least one entry")

    @property
    def level(self) -> int:
        return len(self.multicharge)

    def residue(self, x: int) -> int:
        return _reduce(x, self.e)

    def is_separated(self, n: int) -> bool:
        if self.e == 0:
            return True
        k = self.multicharge
        return all(k[l] - k[l + 1] >= n for l in range(len(k) - 1))

    def metadata(self, n: int) -> dict:
        return {
            "e": self.e,
            "level": self.level,
            "charge": list(self.multicharge),
            "separated": self.is_separated(n),
        }

    def weight_pairing(self, i: int) -> int:
        """(Lambda, alpha_i): number of charges congruent to ``i``."""
        i = self.residue(i)
        return sum(1 for k in self.multicharge if self.residue(k) == i)


class Node(NamedTuple):
    row: int
    col: int
    comp: int


def is_below(a: Node, b: Node) -> bool:
    """True when ``a`` is strictly below ``b``."""
    return a.comp > b.comp or (a.comp == b.comp and a.row > b.row)


@dataclass(frozen=True)
class Multipartition:
    """An l-tuple of partitions, or of compositions when ``relaxed`` is set.

    Relaxed shapes may carry zero-length rows; these arise as shapes of
    restrictions of row-standard tableaux and matter for prefix sums.
    """

    components: tuple[tuple[int, ...], ...]
    relaxed: bool = False

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c) for c in self.components)
        if not self.relaxed:
            comps = tuple(tuple(x for x in c if x != 0) for c in comps)
            for c in comps:
                if any(x < 0 for x in c) or any(c[j] < c[j + 1] for j in range(len(c) - 1)):
                    raise ValueError(f"component {c} is not a partition")
        elif any(x < 0 for c in comps for x in c):
            raise ValueError("negative row length")
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_list(cls, comps: Sequence[Sequence[int]], relaxed: bool = False) -> "Multipartition":
        return cls(tuple(tuple(c) for c in comps), relaxed)

    @classmethod
    def empty(cls, level: int) -> "Multipartition":
        return cls(tuple(() for _ in range(level)))

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def to_list(self) -> list[list[int]]:
        return [list(c) for c in self.components]

    def nodes(self) -> list[Node]:
        """All nodes, read along rows, components in order."""
        return [
            Node(r + 1, c + 1, l + 1)
            for l, comp in enumerate(self.components)
            for r, length in enumerate(comp)
            for c in range(length)
        ]

    def __contains__(self, node: Node) -> bool:
        if not 1 <= node.comp <= self.level:
            return False
        comp = self.components[node.comp - 1]
        return 1 <= node.row <= len(comp) and 1 <= node.col <= comp[node.row - 1]

    def add_node(self, a: Node) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comp = comps[a.comp - 1]
        if a.row == len(comp) + 1:
            comp.append(0)
        if comp[a.row - 1] != a.col - 1:
            raise ValueError(f"{a} cannot be added to {self}")
        comp[a.row - 1] += 1
        return Multipartition.from_list(comps, self.relaxed)

    def remove_node(self, b: Node) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comp = comps[b.comp - 1]
        if b.row > len(comp) or comp[b.row - 1] != b.col:
            raise ValueError(f"{b} is not at the end of its row in {self}")
        comp[b.row - 1] -= 1
        return Multipartition.from_list(comps, self.relaxed)

    def is_partition_shaped(self) -> bool:
        return all(all(c[j] >= c[j + 1] for j in range(len(c) - 1)) and all(c) for c in self.components)

    def prefix_sums(self, rows: int) -> tuple[int, ...]:
        """Prefix sums over components then rows, padded to ``rows`` rows each."""
        out = []
        total = 0
        for comp in self.components:
            for j in range(rows):
                total += comp[j] if j < len(comp) else 0
                out.append(total)
        return tuple(out)

    def __str__(self):
        return "(" + "|".join(",".join(map(str, c)) if c else "-" for c in self.components) + ")"


def conjugate(mu: Multipartition) -> Multipartition:
    """Reverse the components and transpose each one."""

    def transpose(p):
        return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()

    return Multipartition(tuple(transpose(c) for c in reversed(mu.components)))


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """Dominance on multicompositions via prefix sums."""
    if lam.level != mu.level or lam.n != mu.n:
        raise ValueError("dominance needs shapes of equal size and level")
    rows = max([len(c) for c in lam.components + mu.components] + [1])
    return all(a >= b for a, b in zip(lam.prefix_sums(rows), mu.prefix_sums(rows)))


class ResidueSequence(tuple):
    """Residues of 1, ..., n in a tableau."""


@dataclass(frozen=True)
class StandardTableau:
    """A filling of a diagram by 1..n, stored as components of rows.

    With ``relaxed`` only rows need to increase (a row-standard tableau of a
    multicomposition shape); otherwise columns increase as well and the shape
    is a multipartition.
    """

    rows: tuple[tuple[tuple[int, ...], ...], ...]
    relaxed: bool = False

    def __post_init__(self):
        rows = tuple(tuple(tuple(int(x) for x in row) for row in comp) for comp in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = sorted(x for comp in rows for row in comp for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be 1..n")
        for comp in rows:
            for row in comp:
                if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                    raise ValueError(f"row {row} is not increasing")
        if not self.relaxed:
            self.shape  # validates partition shape
            for comp in rows:
                for r in range(1, len(comp)):
                    for c in range(len(comp[r])):
                        if comp[r - 1][c] >= comp[r][c]:
                            raise ValueError("columns must increase")

    @classmethod
    def from_list(cls, comps, relaxed: bool = False) -> "StandardTableau":
        return cls(tuple(tuple(tuple(r) for r in c) for c in comps), relaxed)

    @cached_property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(r) for r in c) for c in self.rows), self.relaxed)

    @property
    def n(self) -> int:
        return sum(len(r) for c in self.rows for r in c)

    @property
    def level(self) -> int:
        return len(self.rows)

    @cached_property
    def _positions(self) -> tuple[Node, ...]:
        pos = [None] * self.n
        for l, comp in enumerate(self.rows):
            for r, row in enumerate(comp):
                for c, x in enumerate(row):
                    pos[x - 1] = Node(r + 1, c + 1, l + 1)
        return tuple(pos)

    @property
    def entries(self) -> dict[Node, int]:
        return {node: k + 1 for k, node in enumerate(self._positions)}

    def node_of(self, k: int) -> Node:
        return self._positions[k - 1]

    def entry(self, node: Node) -> int:
        return self.rows[node.comp - 1][node.row - 1][node.col - 1]

    def comp_of(self, k: int) -> int:
        return self._positions[k - 1].comp

    @cached_property
    def _restriction_prefixes(self) -> tuple[tuple[int, ...], ...]:
        # prefix-sum vector of Shape(t_m) for m = 1..n, padded to a common row count
        rows = max([len(c) for c in self.rows] + [1])
        counts = [[0] * rows for _ in self.rows]
        out = []
        for node in self._positions:
            counts[node.comp - 1][node.row - 1] += 1
            total = 0
            vec = []
            for comp in counts:
                for x in comp:
                    total += x
                    vec.append(total)
            out.append(tuple(vec))
        return tuple(out)

    def restrict(self, m: int) -> "StandardTableau":
        """The subtableau holding 1..m."""
        comps = []
        for comp in self.rows:
            rows = [tuple(x for x in row if x <= m) for row in comp]
            if not self.relaxed:
                rows = [r for r in rows if r]
            comps.append(tuple(rows))
        return StandardTableau(tuple(comps), self.relaxed)

    def conjugate(self) -> "StandardTableau":
        """Reverse components and swap rows with columns in each."""
        comps = []
        for comp in reversed(self.rows):
            width = len(comp[0]) if comp else 0
            comps.append(tuple(tuple(row[c] for row in comp if c < len(row)) for c in range(width)))
        return StandardTableau(tuple(comps), self.relaxed)

    def act(self, images: Sequence[int], relaxed: bool | None = None) -> "StandardTableau":
        """Relabel entry k by ``images[k-1]`` (right action of a permutation)."""
        rel = self.relaxed if relaxed is None else relaxed
        comps = tuple(tuple(tuple(images[x - 1] for x in row) for row in comp) for comp in self.rows)
        return StandardTableau(comps, rel)

    def to_list(self) -> list[list[list[int]]]:
        return [[list(r) for r in c] for c in self.rows]

    def __str__(self):
        return "(" + "|".join("/".join(",".join(map(str, r)) for r in c) if c else "-" for c in self.rows) + ")"


def _padded_prefixes(t: StandardTableau, rows: int) -> tuple[tuple[int, ...], ...]:
    own = max([len(c) for c in t.rows] + [1])
    vecs = t._restriction_prefixes
    if own == rows:
        return vecs
    out = []
    for vec in vecs:
        padded = []
        for l in range(t.level):
            block = list(vec[l * own:(l + 1) * own])
            padded.extend(block + [block[-1]] * (rows - own))
        out.append(tuple(padded))
    return tuple(out)


def tableau_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """s dominates t when Shape(s_m) dominates Shape(t_m) for every m."""
    if s.n != t.n or s.level != t.level:
        raise ValueError("tableau dominance needs equal size and level")
    rows = max([len(c) for c in s.rows + t.rows] + [1])
    for a, b in zip(_padded_prefixes(s, rows), _padded_prefixes(t, rows)):
        if any(x < y for x, y in zip(a, b)):
            return False
    return True


def strong_dominates(pair1, pair2) -> bool:
    """(s, t) strongly dominates (u, v): s dominates u and t dominates v."""
    (s, t), (u, v) = pair1, pair2
    return tableau_dominates(s, u) and tableau_dominates(t, v)


def pair_dominates(pair1, pair2) -> bool:
    """The cellular pair order: strictly larger shape, or same shape and strong dominance."""
    (s, t), (u, v) = pair1, pair2
    lam, mu = s.shape, u.shape
    if lam == mu:
        return tableau_dominates(s, u) and tableau_dominates(t, v)
    return dominates(lam, mu)


def comp_leq(s: StandardTableau, t: StandardTableau) -> bool:
    if s.n != t.n:
        raise ValueError("comp comparison needs tableaux of equal size")
    return all(s.comp_of(k) <= t.comp_of(k) for k in range(1, s.n + 1))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _level_of(params_or_level) -> int:
    return params_or_level.level if isinstance(params_or_level, QuiverParams) else int(params_or_level)


@lru_cache(maxsize=None)
def _multipartitions(n: int, level: int) -> tuple[Multipartition, ...]:
    def split(n, level):
        if level == 1:
            for p in enumerate_partitions(n):
                yield (p,)
            return
        for k in range(n, -1, -1):
            for p in enumerate_partitions(k):
                for rest in split(n - k, level - 1):
                    yield (p,) + rest

    shapes = [Multipartition(c) for c in split(n, level)]
    rows = max(n, 1)
    shapes.sort(key=lambda m: m.prefix_sums(rows), reverse=True)
    return tuple(shapes)


def enumerate_multipartitions(n: int, params) -> list[Multipartition]:
    """All multipartitions of n, most dominant first.

    The order is lexicographic (descending) on padded prefix-sum vectors, a
    total order refining dominance.
    """
    return list(_multipartitions(n, _level_of(params)))


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def enumerate_multicompositions(n: int, level: int) -> list[Multipartition]:
    """l-tuples of compositions (positive parts) of total size n."""

    def split(n, level):
        if level == 1:
            for c in _compositions(n):
                yield (c,)
            return
        for k in range(n, -1, -1):
            for c in _compositions(k):
                for rest in split(n - k, level - 1):
                    yield (c,) + rest

    return [Multipartition(c, relaxed=True) for c in split(n, level)]


def _removable_positions(comps):
    out = []
    for l, comp in enumerate(comps):
        for r, length in enumerate(comp):
            nxt = comp[r + 1] if r + 1 < len(comp) else 0
            if length > nxt:
                out.append(Node(r + 1, length, l + 1))
    return out


@lru_cache(maxsize=None)
def _std(mu: Multipartition) -> tuple[StandardTableau, ...]:
    n = mu.n
    if n == 0:
        return (StandardTableau(tuple(() for _ in mu.components)),)
    out = []
    # removable nodes scanned bottom to top so that t^mu comes first
    for b in reversed(_removable_positions(mu.components)):
        smaller = mu.remove_node(b)
        for t in _std(smaller):
            comps = [list(list(r) for r in c) for c in t.rows]
            comp = comps[b.comp - 1]
            if b.row == len(comp) + 1:
                comp.append([])
            comp[b.row - 1].append(n)
            out.append(StandardTableau.from_list(comps))
    return tuple(out)


def enumerate_std(mu: Multipartition) -> list[StandardTableau]:
    """Standard mu-tableaux by last-letter recursion; starts at t^mu, ends at t_mu."""
    if mu.relaxed:
        raise ValueError("standard tableaux need a multipartition shape")
    return list(_std(mu))


def enumerate_row_standard(mu: Multipartition) -> list[StandardTableau]:
    """All row-standard tableaux of a multicomposition shape."""
    from itertools import combinations

    rows = [(l, r, length) for l, comp in enumerate(mu.components) for r, length in enumerate(comp)]
    out = []

    def fill(idx, remaining, acc):
        if idx == len(rows):
            comps = [[None] * len(comp) for comp in mu.components]
            for (l, r, _), chosen in zip(rows, acc):
                comps[l][r] = chosen
            out.append(StandardTableau.from_list(comps, relaxed=True))
            return
        length = rows[idx][2]
        for chosen in combinations(remaining, length):
            rest = tuple(x for x in remaining if x not in chosen)
            fill(idx + 1, rest, acc + [chosen])

    fill(0, tuple(range(1, mu.n + 1)), [])
    return out


def initial_tableau(mu: Multipartition) -> StandardTableau:
    """t^mu: 1..n along the rows, components in order."""
    k = 0
    comps = []
    for comp in mu.components:
        rows = []
        for length in comp:
            rows.append(tuple(range(k + 1, k + length + 1)))
            k += length
        comps.append(tuple(rows))
    return StandardTableau(tuple(comps), mu.relaxed)


def final_tableau(mu: Multipartition) -> StandardTableau:
    """t_mu: 1..n down the columns, components from last to first."""
    comps = [[[0] * length for length in comp] for comp in mu.components]
    k = 0
    for l in reversed(range(mu.level)):
        comp = mu.components[l]
        width = comp[0] if comp else 0
        for c in range(width):
            for r in range(len(comp)):
                if comp[r] > c:
                    k += 1
                    comps[l][r][c] = k
    return StandardTableau.from_list(comps)


def node_residue(a: Node, params: QuiverParams) -> int:
    return params.residue(a.col - a.row + params.multicharge[a.comp - 1])


def _addable_positions(comps):
    out = []
    for l, comp in enumerate(comps):
        for r in range(len(comp) + 1):
            length = comp[r] if r < len(comp) else 0
            if r == 0 or comp[r - 1] > length:
                out.append(Node(r + 1, length + 1, l + 1))
    return out


def addable_nodes(mu: Multipartition, i: int | None, params: QuiverParams) -> list[Node]:
    """Addable i-nodes of mu, top to bottom. ``i=None`` returns all addable nodes."""
    nodes = _addable_positions(mu.components)
    if i is None:
        return nodes
    i = params.residue(i)
    return [a for a in nodes if node_residue(a, params) == i]


def removable_nodes(mu: Multipartition, i: int | None, params: QuiverParams) -> list[Node]:
    """Removable i-nodes of mu, top to bottom. ``i=None`` returns all removable nodes."""
    nodes = _removable_positions(mu.components)
    if i is None:
        return nodes
    i = params.residue(i)
    return [b for b in nodes if node_residue(b, params) == i]


def _signed_count(mu: Multipartition, a: Node, params: QuiverParams, below: bool) -> int:
    i = node_residue(a, params)
    add = addable_nodes(mu, i, params)
    rem = removable_nodes(mu, i, params)
    if a not in add and a not in rem:
        raise ValueError(f"{a} is neither an addable nor a removable node of {mu}")
    for x in add + rem:
        # two i-nodes never share a row of one component
        assert x == a or (x.comp, x.row) != (a.comp, a.row), (x, a)
    if below:
        return sum(is_below(x, a) for x in add) - sum(is_below(x, a) for x in rem)
    return sum(is_below(a, x) for x in add) - sum(is_below(a, x) for x in rem)


def d_below(mu: Multipartition, a: Node, params: QuiverParams) -> int:
    """d_A(mu): addable minus removable i-nodes strictly below A."""
    return _signed_count(mu, a, params, below=True)


def d_above(mu: Multipartition, a: Node, params: QuiverParams) -> int:
    """d^A(mu): addable minus removable i-nodes strictly above A."""
    return _signed_count(mu, a, params, below=False)


def _statistic(t: StandardTableau, params: QuiverParams, below: bool) -> int:
    total = 0
    comps = [[] for _ in range(t.level)]
    for k in range(1, t.n + 1):
        a = t.node_of(k)
        nu = Multipartition(tuple(tuple(c) for c in comps))
        total += _signed_count(nu, a, params, below)
        comp = comps[a.comp - 1]
        if a.row > len(comp):
            comp.append(0)
        comp[a.row - 1] += 1
    return total


def degree(t: StandardTableau, params: QuiverParams) -> int:
    return _statistic(t, params, below=True)


def codegree(t: StandardTableau, params: QuiverParams) -> int:
    return _statistic(t, params, below=False)


def residue_sequence(t: StandardTableau, params: QuiverParams) -> ResidueSequence:
    return ResidueSequence(node_residue(t.node_of(k), params) for k in range(1, t.n + 1))


@dataclass(frozen=True)
class BlockLabel:
    """Residue content: sorted ``(residue, multiplicity)`` pairs, zero counts dropped."""

    content: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = tuple(sorted((int(i), int(c)) for i, c in self.content if c))
        if any(c < 0 for _, c in canon) or len({i for i, _ in canon}) != len(canon):
            raise ValueError("invalid block content")
        object.__setattr__(self, "content", canon)

    @classmethod
    def from_residues(cls, residues: Iterable[int]) -> "BlockLabel":
        acc: dict[int, int] = {}
        for i in residues:
            acc[i] = acc.get(i, 0) + 1
        return cls(tuple(acc.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.content)

    @property
    def n(self) -> int:
        return sum(c for _, c in self.content)

    def to_list(self) -> list[list[int]]:
        return [[i, c] for i, c in self.content]


def block_of(mu: Multipartition, params: QuiverParams) -> BlockLabel:
    return BlockLabel.from_residues(node_residue(a, params) for a in mu.nodes())


def block_of_residues(residues: Iterable[int]) -> BlockLabel:
    return BlockLabel.from_residues(residues)


def cartan_entry(i: int, j: int, e: int) -> int:
    """Entry a_ij of the Cartan matrix of the quiver Z/eZ (type A_infinity when e = 0)."""
    if e == 0:
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0
    i, j = i % e, j % e
    if i == j:
        return 2
    if e == 2:
        return -2
    return -1 if (j - i) % e in (1, e - 1) else 0


def defect(beta: BlockLabel, params: QuiverParams) -> int:
    """(Lambda, beta) - (beta, beta) / 2."""
    content = beta.as_dict()
    pairing = sum(c * params.weight_pairing(i) for i, c in content.items())
    form = sum(ci * cj * cartan_entry(i, j, params.e) for i, ci in content.items() for j, cj in content.items())
    assert form % 2 == 0, form
    return pairing - form // 2


@lru_cache(maxsize=None)
def graded_dim(mu: Multipartition, params: QuiverParams) -> LaurentIntPoly:
    """Sum of q^deg(t) over standard mu-tableaux."""
    return LaurentIntPoly((degree(t, params), 1) for t in _std(mu))

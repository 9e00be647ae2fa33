"""Permutations of {1, ..., n} acting on the right.

A permutation is stored by its images: ``w.images[k-1]`` is ``k.w``. Products
compose left to right, so ``(u * v).images[k-1] == v(u(k))`` and the word
``s_{i_1} ... s_{i_k}`` applies ``s_{i_1}`` first. Tableaux are acted on by
relabelling entries, which gives ``t = t^mu d(t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Multipartition, StandardTableau, initial_tableau

__all__ = [
    "Permutation",
    "length",
    "reduced_expression",
    "bruhat_leq",
    "bruhat_interval",
    "tableau_permutation",
    "lemma22_witness",
    "all_permutations",
]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return cls(tuple(imgs))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w.right_simple(i)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, x in enumerate(self.images, start=1):
            inv[x - 1] = k
        return Permutation(tuple(inv))

    def right_simple(self, i: int) -> "Permutation":
        """w s_i: swap the values i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.images))

    def left_simple(self, i: int) -> "Permutation":
        """s_i w: swap the images of i and i+1."""
        imgs = list(self.images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Permutation(tuple(imgs))

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w)."""
        return self.images.index(i) > self.images.index(i + 1)

    def has_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w)."""
        return self.images[i - 1] > self.images[i]

    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.images, start=1))

    def support(self) -> set[int]:
        return {k for k, x in enumerate(self.images, start=1) if x != k}


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations

    return [Permutation(p) for p in permutations(range(1, n + 1))]


def length(w: Permutation) -> int:
    """Number of inversions."""
    imgs = w.images
    return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])


def reduced_expression(w: Permutation) -> list[int]:
    """Canonical reduced word: repeatedly strip the leftmost left descent.

    This is bubble sort on the image list, swapping the first adjacent
    inversion each time, and yields the lexicographically smallest reduced
    word. For the longest element of S_3 it gives [1, 2, 1].
    """
    word = []
    cur = list(w.images)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            return word


def bruhat_interval(w: Permutation) -> set[tuple[int, ...]]:
    """Images of all subword products of the canonical reduced word of w."""
    reach = {Permutation.identity(w.n).images}
    for i in reduced_expression(w):
        reach |= {Permutation(x).right_simple(i).images for x in reach}
    return reach


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w when u is a product of a subword of a reduced word for w."""
    if u.n != w.n:
        raise ValueError("Bruhat comparison needs permutations of equal degree")
    if length(u) > length(w):
        return False
    return u.images in bruhat_interval(w)


def tableau_permutation(t: StandardTableau) -> Permutation:
    """d(t): the permutation with t = t^mu d(t)."""
    top = initial_tableau(t.shape)
    imgs = [0] * t.n
    for l, comp in enumerate(top.rows):
        for r, row in enumerate(comp):
            for c, k in enumerate(row):
                imgs[k - 1] = t.rows[l][r][c]
    return Permutation(tuple(imgs))


def _same_row(t: StandardTableau, a: int, b: int) -> bool:
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.row) == (y.comp, y.row)


def _same_col(t: StandardTableau, a: int, b: int) -> bool:
    x, y = t.node_of(a), t.node_of(b)
    return (x.comp, x.col) == (y.comp, y.col)


def lemma22_witness(mu: Multipartition, s: StandardTableau, a: int, b: int) -> tuple[Permutation, int]:
    """Move a column pair of s to adjacent integers without losing standardness.

    Given a < b in one row of t^mu and one column of the standard tableau s,
    return (w, c) with w supported on {a, ..., b} such that s w is standard,
    l(d(s) w) = l(d(s)) + l(w), and c, c+1 lie in one row of t^mu and one
    column of s w.

    Let h be the entry directly below a, and call a node *upper* if it sits in
    an earlier component than a or in rows 1..r of a's component, r being the
    row of a. Take the largest upper c in [a, h). If c and c+1 share a column
    we are done; otherwise c+1 is lower and not in the column of c, so
    swapping them keeps the tableau standard and adds one to the length. When
    c+1 was h itself, h moves up by one. Each step shrinks the set of lower
    entries between a and h, so the walk ends, at worst with h = a+1.
    """
    n = s.n
    if mu.n != n or not (1 <= a < b <= n):
        raise ValueError("need 1 <= a < b <= n and shapes of equal size")
    top = initial_tableau(mu)
    if not _same_row(top, a, b) or not _same_col(s, a, b):
        raise ValueError(f"{a} and {b} must share a row of t^mu and a column of s")
    # the entry just below a in its column also lies between a and b
    na = s.node_of(a)
    hi = s.entry(type(na)(na.row + 1, na.col, na.comp))
    r, l = na.row, na.comp
    word = []
    cur = s
    while hi - a > 1:

        def upper(k):
            x = cur.node_of(k)
            return x.comp < l or (x.comp == l and x.row <= r)

        c = max(k for k in range(a, hi) if upper(k))
        if _same_col(cur, c, c + 1):
            return Permutation.from_word(word, n), c
        cur = cur.act(Permutation.simple(c, n).images)
        word.append(c)
        if c + 1 == hi:
            hi -= 1
    return Permutation.from_word(word, n), a

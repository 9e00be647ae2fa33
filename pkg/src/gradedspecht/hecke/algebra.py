"""The cyclotomic Hecke algebra H_n(xi, Q) on its normal-word basis.

Elements are dense coordinate vectors over the words L^a T_w with
0 <= a_k < l. Multiplication uses the right regular representation: the
matrices of right multiplication by T_i and L_k are computed once by the
rewriting system in :mod:`affine`, and the matrix of any basis word is a
product of those. An independent route, :meth:`HeckeAlgebra.multiply_direct`,
multiplies in the affine algebra and reduces afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

import numpy as np

from ..combinatorics import QuiverParams, StandardTableau, enumerate_multipartitions, enumerate_std
from . import linalg
from .affine import AffineRewriter, _reduced_word
from .scalars import ScalarField, prime_field, rational_field

__all__ = ["HeckeParams", "NormalWord", "HeckeElement", "HeckeAlgebra", "SemisimplicityError"]


class SemisimplicityError(ValueError):
    """Raised when content vectors fail to separate standard tableaux."""


def _quantum_characteristic(xi, field: ScalarField) -> int:
    if field.p is None:
        if xi == 1:
            return 0
        x = xi
        for e in range(1, 64):
            if x == 1:
                return e
            x = x * xi
        return 0
    if xi == 1:
        return field.p
    x = xi
    e = 1
    while x != 1:
        x = x * xi
        e += 1
    return e


@dataclass(frozen=True)
class HeckeParams:
    """Rank n, multicharge kappa, and the parameter xi over Q or F_p.

    Q_l = xi**kappa_l when xi != 1 and Q_l = kappa_l when xi = 1.
    """

    n: int
    kappa: tuple[int, ...]
    xi: int = 2
    p: int | None = None
    field: ScalarField = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        if not self.kappa:
            raise ValueError("need at least one charge")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        fld = rational_field() if self.p is None else prime_field(self.p)
        object.__setattr__(self, "field", fld)
        if fld(self.xi) == fld.zero:
            raise ValueError("xi must be invertible")

    @classmethod
    def semisimple(cls, n: int, level: int, xi: int = 2) -> "HeckeParams":
        """Rational parameters with charges (l-1)(n+1), ..., n+1, 0."""
        return cls(n, tuple((level - 1 - l) * (n + 1) for l in range(level)), xi)

    @classmethod
    def degenerate(cls, n: int, kappa, p: int) -> "HeckeParams":
        """xi = 1 over F_p, so the quantum characteristic is p."""
        return cls(n, tuple(kappa), 1, p)

    @property
    def level(self) -> int:
        return len(self.kappa)

    @property
    def xi_scalar(self):
        return self.field(self.xi)

    @property
    def is_degenerate(self) -> bool:
        return self.xi_scalar == self.field.one

    @property
    def charges(self) -> tuple:
        f, xi = self.field, self.xi_scalar
        if self.is_degenerate:
            return tuple(f(k) for k in self.kappa)
        return tuple(xi ** k if k >= 0 else f.one / xi ** (-k) for k in self.kappa)

    @property
    def e(self) -> int:
        return _quantum_characteristic(self.xi_scalar, self.field)

    def quiver(self) -> QuiverParams:
        return QuiverParams(self.e, self.kappa)

    def content(self, t: StandardTableau, k: int):
        node = t.node_of(k)
        d = node.col - node.row
        q = self.charges[node.comp - 1]
        if self.is_degenerate:
            return q + d
        xi = self.xi_scalar
        return q * (xi ** d if d >= 0 else self.field.one / xi ** (-d))

    def content_vector(self, t: StandardTableau) -> tuple:
        return tuple(self.content(t, k) for k in range(1, t.n + 1))

    def check_semisimple(self):
        """Raise SemisimplicityError naming two tableaux with equal contents."""
        seen = {}
        for mu in enumerate_multipartitions(self.n, self.level):
            for t in enumerate_std(mu):
                key = self.content_vector(t)
                if key in seen:
                    raise SemisimplicityError(f"tableaux {seen[key]} and {t} have the same contents")
                seen[key] = t

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "level": self.level,
            "charge": list(self.kappa),
            "xi": self.xi,
            "mode": "rational" if self.p is None else "prime",
            "p": self.p,
        }


class NormalWord(NamedTuple):
    """L_1^a_1 ... L_n^a_n T_w, with w given by its images."""

    exponents: tuple[int, ...]
    perm: tuple[int, ...]


class HeckeElement:
    __slots__ = ("algebra", "vec", "_rmat")

    def __init__(self, algebra: "HeckeAlgebra", vec):
        self.algebra = algebra
        self.vec = vec
        self._rmat = None

    def terms(self) -> dict:
        z = self.algebra.field.zero
        return {self.algebra.words[i]: c for i, c in enumerate(self.vec) if c != z}

    def is_zero(self) -> bool:
        z = self.algebra.field.zero
        return all(c == z for c in self.vec)

    def coefficient(self, word) -> object:
        return self.vec[self.algebra.index[NormalWord(*word)]]

    def _wrap(self, vec):
        return HeckeElement(self.algebra, vec)

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = self.algebra.scalar(other)
        return self._wrap(self.vec + other.vec)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = self.algebra.scalar(other)
        return self._wrap(self.vec - other.vec)

    def __rsub__(self, other):
        return self.algebra.scalar(other) - self

    def __neg__(self):
        return self._wrap(-self.vec)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        c = self.algebra.field(other)
        return self._wrap(self.vec * c)

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return self._wrap(self.vec * c)

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return bool(np.all(self.vec == other.vec))
        return self == self.algebra.scalar(other)

    __hash__ = None

    def __repr__(self):
        fld = self.algebra.field
        parts = []
        for w, c in self.terms().items():
            mono = "".join(f"L{k + 1}^{a}" if a > 1 else f"L{k + 1}" for k, a in enumerate(w.exponents) if a)
            word = "".join(f"T{i}" for i in _reduced_word(w.perm))
            parts.append(f"{fld.fmt(c)}*{mono or ''}{word or ('' if mono else '1')}")
        return " + ".join(parts) if parts else "0"


class HeckeAlgebra:
    """Normal-word model of H_n(xi, Q) with l^n n! basis elements."""

    def __init__(self, params: HeckeParams):
        self.params = params
        self.field = params.field
        n, l = params.n, params.level
        self.n = n
        self.rewriter = AffineRewriter(n, params.charges, params.xi, self.field)
        perms = sorted(itertools.permutations(range(1, n + 1)), key=lambda w: (len(_reduced_word(w)), w))
        exps = list(itertools.product(range(l), repeat=n))
        self.words = [NormalWord(a, w) for w in perms for a in exps]
        self.index = {w: i for i, w in enumerate(self.words)}
        self.dim = len(self.words)
        self.identity_index = self.index[NormalWord((0,) * n, tuple(range(1, n + 1)))]
        self._gens = {}
        self._word_mats = {}

    # constructors

    def _vec(self):
        return linalg.zeros(self.dim, self.field)

    def zero(self) -> HeckeElement:
        return HeckeElement(self, self._vec())

    def scalar(self, c) -> HeckeElement:
        v = self._vec()
        v[self.identity_index] = self.field(c)
        return HeckeElement(self, v)

    def one(self) -> HeckeElement:
        return self.scalar(1)

    def basis_element(self, word) -> HeckeElement:
        v = self._vec()
        v[self.index[NormalWord(*word)]] = self.field.one
        return HeckeElement(self, v)

    def element(self, terms: dict) -> HeckeElement:
        """From a dict {(exponents, images): coefficient}; exponents may be >= l."""
        return self.from_affine({(tuple(e), tuple(w)): self.field(c) for (e, w), c in terms.items()})

    def from_affine(self, terms: dict) -> HeckeElement:
        v = self._vec()
        for (e, w), c in self.rewriter.normal_form(terms).items():
            v[self.index[NormalWord(e, w)]] += c
        return HeckeElement(self, v)

    def to_affine(self, a: HeckeElement) -> dict:
        return {(w.exponents, w.perm): c for w, c in a.terms().items()}

    def T(self, w) -> HeckeElement:
        """T_w for a permutation (images tuple or Permutation)."""
        images = tuple(getattr(w, "images", w))
        return self.basis_element(((0,) * self.n, images))

    def T_word(self, word) -> HeckeElement:
        out = self.one()
        for i in word:
            out = out * self.T(_simple_images(i, self.n))
        return out

    def L(self, k: int) -> HeckeElement:
        e = tuple(1 if j == k - 1 else 0 for j in range(self.n))
        return self.element({(e, tuple(range(1, self.n + 1))): 1})

    def from_vector(self, vec) -> HeckeElement:
        return HeckeElement(self, np.asarray(vec, dtype=object).copy())

    # right regular representation

    def _sparse_generator(self, kind: str, i: int):
        key = (kind, i)
        if key in self._gens:
            return self._gens[key]
        rows = []
        rw = self.rewriter
        for word in self.words:
            if kind == "T":
                res = {(word.exponents, w2): c for w2, c in rw.right_t(word.perm, i)}
            else:
                e = tuple(1 if j == i - 1 else 0 for j in range(self.n))
                res = rw.normal_form(rw.mul({(word.exponents, word.perm): self.field.one}, {(e, rw.ident): self.field.one}))
            rows.append([(self.index[NormalWord(e2, w2)], c) for (e2, w2), c in res.items()])
        self._gens[key] = rows
        return rows

    def _sparse_left(self, kind: str, i: int):
        key = ("left", kind, i)
        if key in self._gens:
            return self._gens[key]
        rows = []
        rw = self.rewriter
        one = self.field.one
        for word in self.words:
            if kind == "T":
                res = rw.normal_form(rw.left_t_elem(i, {(word.exponents, word.perm): one}))
            else:
                e = tuple(a + (1 if j == i - 1 else 0) for j, a in enumerate(word.exponents))
                res = rw.normal_form({(e, word.perm): one})
            rows.append([(self.index[NormalWord(e2, w2)], c) for (e2, w2), c in res.items()])
        self._gens[key] = rows
        return rows

    def act(self, a: HeckeElement, kind: str, i: int, side: str = "right") -> HeckeElement:
        """a * g (side="right") or g * a (side="left") for g = T_i or L_i."""
        gen = self._sparse_generator(kind, i) if side == "right" else self._sparse_left(kind, i)
        return HeckeElement(self, self._apply_sparse(a.vec, gen))

    def act_T(self, a: HeckeElement, images, side: str = "right") -> HeckeElement:
        """a * T_w or T_w * a."""
        word = _reduced_word(tuple(getattr(images, "images", images)))
        if side == "left":
            word = tuple(reversed(word))
        for i in word:
            a = self.act(a, "T", i, side)
        return a

    def generator_matrix(self, kind: str, i: int):
        """Dense matrix of right multiplication by T_i ("T") or L_i ("L")."""
        m = linalg.zeros((self.dim, self.dim), self.field)
        for r, row in enumerate(self._sparse_generator(kind, i)):
            for c, x in row:
                m[r, c] += x
        return m

    def _apply_sparse(self, mat, gen):
        """mat @ G for a sparse generator G (acts on the columns of mat)."""
        out = linalg.zeros(mat.shape, self.field)
        twod = mat.ndim == 2
        for r, row in enumerate(gen):
            col = mat[:, r] if twod else mat[r]
            for c, x in row:
                if twod:
                    out[:, c] += col * x
                else:
                    out[c] += col * x
        return out

    def _word_generators(self, word: NormalWord):
        gens = []
        for k, a in enumerate(word.exponents):
            gens += [("L", k + 1)] * a
        gens += [("T", i) for i in _reduced_word(word.perm)]
        return gens

    def word_matrix(self, idx: int):
        """Matrix of right multiplication by the basis word with index idx."""
        if idx in self._word_mats:
            return self._word_mats[idx]
        word = self.words[idx]
        gens = self._word_generators(word)
        if not gens:
            mat = linalg.identity(self.dim, self.field)
        else:
            kind, i = gens[-1]
            # parent word drops the last generator
            if kind == "T":
                parent = NormalWord(word.exponents, tuple(i + 1 if x == i else i if x == i + 1 else x for x in word.perm))
            else:
                e = list(word.exponents)
                e[i - 1] -= 1
                parent = NormalWord(tuple(e), word.perm)
            mat = self._apply_sparse(self.word_matrix(self.index[parent]), self._sparse_generator(kind, i))
        self._word_mats[idx] = mat
        return mat

    def right_matrix(self, a: HeckeElement):
        """R(a) with h R(a) = h a for every row vector h."""
        if a._rmat is None:
            m = linalg.zeros((self.dim, self.dim), self.field)
            z = self.field.zero
            for idx, c in enumerate(a.vec):
                if c != z:
                    m = m + self.word_matrix(idx) * c
            a._rmat = m
        return a._rmat

    def element_of_matrix(self, m) -> HeckeElement:
        """Recover a from R(a): the row of the identity word."""
        return HeckeElement(self, np.asarray(m, dtype=object)[self.identity_index].copy())

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements belong to different algebras")
        z = self.field.zero
        nnz_a = sum(1 for c in a.vec if c != z)
        if b._rmat is not None or nnz_a > 4:
            return HeckeElement(self, a.vec.dot(self.right_matrix(b)))
        out = self._vec()
        for idx, c in enumerate(b.vec):
            if c == z:
                continue
            cur = a.vec
            for kind, i in self._word_generators(self.words[idx]):
                cur = self._apply_sparse(cur, self._sparse_generator(kind, i))
            out = out + cur * c
        return HeckeElement(self, out)

    def multiply_direct(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        """Second route: product in the affine algebra, then reduce."""
        return self.from_affine(self.rewriter.mul(self.to_affine(a), self.to_affine(b)))

    def matrix_of_elements(self, elems):
        return np.array([list(x.vec) for x in elems], dtype=object).reshape(len(elems), self.dim)

    def star(self, a: HeckeElement) -> HeckeElement:
        """The anti-involution fixing every T_i and L_k: L^a T_w -> T_{w^-1} L^a."""
        out = self.zero()
        for w, c in a.terms().items():
            inv = [0] * self.n
            for k, x in enumerate(w.perm, start=1):
                inv[x - 1] = k
            t = self.T(tuple(inv))
            mono = self.basis_element((w.exponents, tuple(range(1, self.n + 1))))
            out = out + (t * mono) * c
        return out


def _simple_images(i: int, n: int) -> tuple[int, ...]:
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return tuple(imgs)

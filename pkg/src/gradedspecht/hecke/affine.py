"""Rewriting in the affine Hecke algebra and the cyclotomic normal form.

An element is a dict ``{(exponents, images): coefficient}`` standing for
``sum c X^a T_w``, where ``images`` is the image tuple of w (right action, as
in :mod:`gradedspecht.symmetric`). The X's commute with each other and pass
through T_i by

    T_i f = (s_i f) T_i + K_i d_i(f),   K_i = (xi - 1) X_{i+1} + delta,
    d_i(f) = (f - s_i f) / (X_{i+1} - X_i),

with delta = 1 when xi = 1 and 0 otherwise. The cyclotomic quotient is cut
out by prod_j (X_1 - Q_j); its conjugates E_k = xi^-1 T_{k-1} E_{k-1} T_{k-1}
are monic in X_k of degree l, which lets every monomial be reduced to
exponents below l.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["AffineRewriter"]


@lru_cache(maxsize=None)
def _reduced_word(images: tuple[int, ...]) -> tuple[int, ...]:
    word = []
    cur = list(images)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            return tuple(word)


def _acc(d, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class AffineRewriter:
    def __init__(self, n: int, charges, xi, field):
        self.n = n
        self.field = field
        self.level = len(charges)
        self.charges = tuple(field(q) for q in charges)
        self.xi = field(xi)
        self.delta = field.one if self.xi == field.one else field.zero
        self.ident = tuple(range(1, n + 1))
        self._nf_cache: dict = {}
        self.relations = self._cyclotomic_relations()

    # finite Hecke algebra on T_w

    def left_t(self, i: int, images):
        """T_i T_w as a list of (images, coefficient)."""
        imgs = list(images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        sw = tuple(imgs)
        if images[i - 1] < images[i]:
            return [(sw, self.field.one)]
        return [(images, self.xi - 1), (sw, self.xi)]

    def right_t(self, images, i: int):
        """T_w T_i as a list of (images, coefficient)."""
        sw = tuple(i + 1 if x == i else i if x == i + 1 else x for x in images)
        if images.index(i) < images.index(i + 1):
            return [(sw, self.field.one)]
        return [(images, self.xi - 1), (sw, self.xi)]

    def t_product(self, u, v):
        """T_u T_v as a dict {images: coefficient}."""
        cur = {u: self.field.one}
        for i in _reduced_word(v):
            nxt: dict = {}
            for w, c in cur.items():
                for w2, c2 in self.right_t(w, i):
                    _acc(nxt, w2, c * c2)
            cur = nxt
        return cur

    # polynomial helpers

    @staticmethod
    def _swap(i, exps):
        e = list(exps)
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e)

    def divided_difference(self, i: int, exps):
        """d_i of a monomial, as a dict {exponents: coefficient}."""
        a, b = exps[i - 1], exps[i]
        out: dict = {}
        if a == b:
            return out
        lo, m, sign = (b, a - b - 1, -self.field.one) if a > b else (a, b - a - 1, self.field.one)
        for j in range(m + 1):
            e = list(exps)
            e[i - 1] = lo + j
            e[i] = lo + m - j
            _acc(out, tuple(e), sign)
        return out

    def _times_k(self, i: int, poly):
        """K_i * poly."""
        out: dict = {}
        xi1 = self.xi - 1
        for e, c in poly.items():
            if xi1:
                e2 = list(e)
                e2[i] += 1
                _acc(out, tuple(e2), c * xi1)
            if self.delta:
                _acc(out, e, c * self.delta)
        return out

    def left_t_elem(self, i: int, elem):
        """T_i * elem in the affine algebra."""
        out: dict = {}
        for (e, w), c in elem.items():
            se = self._swap(i, e)
            for w2, c2 in self.left_t(i, w):
                _acc(out, (se, w2), c * c2)
            dd = self.divided_difference(i, e)
            if dd:
                for e2, c2 in self._times_k(i, dd).items():
                    _acc(out, (e2, w), c * c2)
        return out

    def mul(self, a, b):
        """Product in the affine Hecke algebra (no cyclotomic reduction)."""
        by_u: dict = {}
        for (e, u), c in a.items():
            by_u.setdefault(u, {})[e] = c
        by_v: dict = {}
        for (e, v), c in b.items():
            by_v.setdefault(v, {})[(e, self.ident)] = c
        out: dict = {}
        for v, qv in by_v.items():
            for u, pu in by_u.items():
                cur = qv
                for i in reversed(_reduced_word(u)):
                    cur = self.left_t_elem(i, cur)
                for (e, x), c in cur.items():
                    xv = self.t_product(x, v)
                    for pe, pc in pu.items():
                        ee = tuple(p + q for p, q in zip(pe, e))
                        for y, c3 in xv.items():
                            _acc(out, (ee, y), pc * c * c3)
        return out

    # cyclotomic reduction

    def _cyclotomic_relations(self):
        n, l, f = self.n, self.level, self.field
        poly = {0: f.one}
        for q in self.charges:
            nxt: dict = {}
            for d, c in poly.items():
                _acc(nxt, d + 1, c)
                _acc(nxt, d, -q * c)
            poly = nxt
        e1 = {}
        for d, c in poly.items():
            exps = (d,) + (0,) * (n - 1)
            e1[(exps, self.ident)] = c
        rels = [e1]
        xinv = f.one / self.xi
        for k in range(2, n + 1):
            tk = {((0,) * n, tuple(_simple(k - 1, n))): f.one}
            ek = self.mul(self.mul(tk, rels[-1]), tk)
            ek = {key: c * xinv for key, c in ek.items()}
            lead_key = (tuple(l if j == k - 1 else 0 for j in range(n)), self.ident)
            lead = ek.get(lead_key)
            assert lead, "conjugated relation lost its leading term"
            ek = {key: c / lead for key, c in ek.items()}
            for (e, w), c in ek.items():
                if (e, w) != lead_key:
                    assert e[k - 1] < l and all(x == 0 for x in e[k:]), "relation is not monic in X_k"
            rels.append(ek)
        # store X_k^l - E_k, the replacement for X_k^l
        out = []
        for k, ek in enumerate(rels, start=1):
            lead_key = (tuple(l if j == k - 1 else 0 for j in range(n)), self.ident)
            out.append({key: -c for key, c in ek.items() if key != lead_key})
        return out

    def monomial_nf(self, exps):
        """Normal form of X^exps: dict {(exponents, images)} with exponents < l."""
        cached = self._nf_cache.get(exps)
        if cached is not None:
            return cached
        l = self.level
        k = max((j for j, x in enumerate(exps) if x >= l), default=None)
        if k is None:
            res = {(exps, self.ident): self.field.one}
        else:
            base = list(exps)
            base[k] -= l
            res = {}
            for (e, w), c in self.relations[k].items():
                sub = self.monomial_nf(tuple(p + q for p, q in zip(base, e)))
                for (e2, w2), c2 in sub.items():
                    for y, c3 in self.t_product(w2, w).items():
                        _acc(res, (e2, y), c * c2 * c3)
        self._nf_cache[exps] = res
        return res

    def normal_form(self, elem):
        out: dict = {}
        for (e, w), c in elem.items():
            if max(e, default=0) < self.level:
                _acc(out, (e, w), c)
                continue
            for (e2, w2), c2 in self.monomial_nf(e).items():
                for y, c3 in self.t_product(w2, w).items():
                    _acc(out, (e2, y), c * c2 * c3)
        return out


def _simple(i, n):
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return imgs

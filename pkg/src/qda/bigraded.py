"""The bigraded algebra on generators ``x^l, y^m``.

Its four relation families are

    x^l x^m - R^{lm}_{vr} x^v x^r
    x^l y^m - R^{lm}_{vr} y^v x^r
    y^l x^m - R^{lm}_{vr} x^v y^r
    y^l y^m + R^{lm}_{vr} y^v y^r

Components ``A^{(r,s)}`` (``r`` x-letters, ``s`` y-letters) are built block by
block; the full ``(2n)^m`` word space is never materialized.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from qda import kernel
from qda.exactnum import Span, add_into
from qda.tensorspace import XY, block_words, embed_relation, letters, ordinal


class BidegreeBasis:
    __slots__ = ("bidegree", "ideal", "words", "complement", "index")

    def __init__(self, bidegree, ideal, words):
        self.bidegree = bidegree
        self.ideal = ideal
        self.words = words
        self.complement = tuple(w for w in words if w not in ideal.pivots)
        self.index = {w: i for i, w in enumerate(self.complement)}

    @property
    def dim(self):
        return len(self.complement)

    def nf(self, vec):
        return self.ideal.reduce(vec)


@dataclass(frozen=True)
class FreenessRow:
    r: int
    s: int
    dim: int
    expected: int

    @property
    def ok(self):
        return self.dim == self.expected


class BigAlgebra:
    def __init__(self, R):
        self.R = R
        self.n = R.n
        self.mode = R.mode
        self.base = 2 * R.n
        self.families = self._families()
        self._blocks = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return f"BigAlgebra(n={self.n}, R={self.R!r})"

    def _families(self):
        n, b = self.n, self.base
        one = self.mode.one()
        fam = {"xx": [], "xy": [], "yx": [], "yy": []}
        # (left type, right type, image left type, image right type, sign)
        spec = {"xx": (0, 0, 0, 0, -1), "xy": (0, n, n, 0, -1),
                "yx": (n, 0, 0, n, -1), "yy": (n, n, n, n, +1)}
        for name, (tl, tr, il, ir, sign) in spec.items():
            for lam in range(n):
                for mu in range(n):
                    v = {(tl + lam) * b + tr + mu: one}
                    for k, c in self.R.image(lam, mu).items():
                        nu, rho = divmod(k, n)
                        add_into(v, {(il + nu) * b + ir + rho: c * sign})
                    fam[name].append(v)
        return fam

    def family_vectors(self, bidegree):
        return {(2, 0): self.families["xx"],
                (1, 1): self.families["xy"] + self.families["yx"],
                (0, 2): self.families["yy"]}.get(tuple(bidegree), [])

    def bidegree_basis(self, r, s):
        if r < 0 or s < 0:
            raise ValueError("bidegree must be non-negative")
        key = (r, s)
        blk = self._blocks.get(key)
        if blk is not None:
            return blk
        with self._lock:
            blk = self._blocks.get(key)
            if blk is None:
                blk = BidegreeBasis(key, self._ideal(r, s), block_words(self.n, r, s))
                self._blocks[key] = blk
        return blk

    def _ideal(self, r, s):
        n, b = self.n, self.base
        m = r + s
        amb = b ** m
        if m < 2:
            return Span.zero(amb, self.mode)
        if m == 2:
            return Span.from_vectors(amb, self.family_vectors((r, s)), self.mode)
        # ideal(r,s) = ideal(r-1,s) x + ideal(r,s-1) y + words (x) relations in the last slot
        pivots = {}
        if r >= 1:
            for c, row in self.bidegree_basis(r - 1, s).ideal.pivots.items():
                for i in range(n):
                    pivots[c * b + i] = {w * b + i: x for w, x in row.items()}
        if s >= 1:
            for c, row in self.bidegree_basis(r, s - 1).ideal.pivots.items():
                for i in range(n):
                    pivots[c * b + n + i] = {w * b + n + i: x for w, x in row.items()}
        for fb in ((2, 0), (1, 1), (0, 2)):
            vecs = self.family_vectors(fb)
            for v in embed_relation(vecs, m - 2, m, n, XY, (r, s)):
                kernel.insert_vector(v, pivots)
        kernel.back_substitute(pivots)
        return Span(amb, pivots, self.mode)

    def dim(self, r, s):
        return self.bidegree_basis(r, s).dim

    def nf(self, r, s, vec):
        return self.bidegree_basis(r, s).nf(vec)

    def big_multiply(self, a, ab, b, bb):
        """Product of ``a`` in bidegree ``ab`` and ``b`` in bidegree ``bb``."""
        shift = self.base ** sum(bb)
        prod = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                add_into(prod, {wa * shift + wb: ca * cb})
        return self.nf(ab[0] + bb[0], ab[1] + bb[1], prod)

    def x_word(self, word, m):
        """Re-letter an x-only word (base ``n``) into the XY alphabet."""
        return ordinal(letters(word, m, self.n), self.base)

    def y_word(self, word, m):
        n = self.n
        return ordinal([c + n for c in letters(word, m, n)], self.base)

    def x_vector(self, vec, m):
        return {self.x_word(w, m): c for w, c in vec.items()}

    def y_vector(self, vec, m):
        return {self.y_word(w, m): c for w, c in vec.items()}

    def product_rank(self, r, s, x_first=True):
        """Rank of the span of products of basis elements of ``A^{(r,0)}`` and ``A^{(0,s)}``."""
        one = self.mode.one()
        xs = self.bidegree_basis(r, 0).complement
        ys = self.bidegree_basis(0, s).complement
        rows = []
        for a in xs:
            for c in ys:
                if x_first:
                    rows.append(self.big_multiply({a: one}, (r, 0), {c: one}, (0, s)))
                else:
                    rows.append(self.big_multiply({c: one}, (0, s), {a: one}, (r, 0)))
        return kernel.rank_of(rows)

    def check_pprod(self, r, s):
        """``A^{(r,s)} = A^{(r,0)} A^{(0,s)} = A^{(0,s)} A^{(r,0)}``, by rank."""
        d = self.dim(r, s)
        return self.product_rank(r, s, True) == d and self.product_rank(r, s, False) == d

    def check_freeness_dims(self, N, alg=None, alg_prime=None):
        """Per-bidegree comparison of ``dim A^{(r,s)}`` with ``dim A_r * dim A'_s``."""
        from qda.quadalg import algebra, algebra_prime
        alg = alg or algebra(self.R)
        alg_prime = alg_prime or algebra_prime(self.R)
        rows = []
        for m in range(N + 1):
            for s in range(m + 1):
                r = m - s
                rows.append(FreenessRow(r, s, self.dim(r, s), alg.dim(r) * alg_prime.dim(s)))
        return rows

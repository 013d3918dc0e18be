"""Quadratic algebras ``T(E)/(Rel)`` degree by degree, including the dual
spaces ``A^{!*}_p``."""

from __future__ import annotations

import threading

from qda import kernel
from qda.exactnum import RATIONAL, Span, add_into
from qda.tensorspace import X, embed_relation

FLAVORS = ("A", "Aprime", "Adual", "custom")


class InclusionError(RuntimeError):
    """An inclusion that holds for every quadratic algebra failed."""


class GradedBasis:
    """Degree-``m`` component: the ideal span and its complement words.

    Complement words (non-pivot columns of the ideal's RREF) are the
    canonical coset representatives.
    """

    __slots__ = ("degree", "ideal", "complement", "index")

    def __init__(self, degree, ideal):
        self.degree = degree
        self.ideal = ideal
        self.complement = tuple(w for w in range(ideal.ambient) if w not in ideal.pivots)
        self.index = {w: i for i, w in enumerate(self.complement)}

    @property
    def dim(self):
        return len(self.complement)

    def nf(self, vec):
        return self.ideal.reduce(vec)


class QuadraticAlgebra:
    """Quadratic algebra on ``n`` generators with relation span ``rel_span``
    inside the 2-letter word space (``n^2`` columns)."""

    def __init__(self, n, rel_span, flavor="custom", mode=RATIONAL, source=None):
        if rel_span.ambient != n * n:
            raise ValueError("relation span must live in E (x) E")
        self.n = n
        self.rel_span = rel_span
        self.flavor = flavor
        self.mode = mode
        self.source = source
        self._graded = {}
        self._dual_spaces = {}
        self._lock = threading.RLock()

    def __repr__(self):
        return f"QuadraticAlgebra({self.flavor}, n={self.n}, dim Rel={self.rel_span.dim})"

    def graded_basis(self, m):
        if m < 0:
            raise ValueError("degree must be non-negative")
        gb = self._graded.get(m)
        if gb is not None:
            return gb
        with self._lock:
            gb = self._graded.get(m)
            if gb is None:
                gb = GradedBasis(m, self._ideal(m))
                self._graded[m] = gb
        return gb

    def _ideal(self, m):
        n = self.n
        if m < 2:
            return Span.zero(n ** m, self.mode)
        if m == 2:
            return self.rel_span
        # Ideal_m = Ideal_{m-1} (x) E + E^{(x)(m-2)} (x) Rel
        prev = self.graded_basis(m - 1).ideal
        pivots = {}
        for c, row in prev.pivots.items():
            for i in range(n):
                pivots[c * n + i] = {w * n + i: x for w, x in row.items()}
        for v in embed_relation(self.rel_span.basis, m - 2, m, n, X):
            kernel.insert_vector(v, pivots)
        kernel.back_substitute(pivots)
        return Span(n ** m, pivots, self.mode)

    def dim(self, m):
        return self.graded_basis(m).dim

    def normal_form(self, m, vec):
        gb = self.graded_basis(m)
        if any(not 0 <= w < gb.ideal.ambient for w in vec):
            raise ValueError(f"vector is not in the degree-{m} word space")
        return gb.nf(vec)

    def multiply(self, a, r, b, s):
        """Product of ``a`` in degree ``r`` and ``b`` in degree ``s``, in normal form."""
        shift = self.n ** s
        prod = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                add_into(prod, {wa * shift + wb: ca * cb})
        return self.graded_basis(r + s).nf(prod)

    def generator(self, i):
        return {i: self.mode.one()}

    def hilbert(self, N):
        if N < 0:
            raise ValueError("N must be non-negative")
        return [self.dim(m) for m in range(N + 1)]

    def koszul_dual_space(self, p):
        """``A^{!*}_p``: intersection over slots ``s`` of ``E^s (x) Rel (x) E^{p-s-2}``."""
        sp = self._dual_spaces.get(p)
        if sp is not None:
            return sp
        with self._lock:
            sp = self._dual_spaces.get(p)
            if sp is None:
                sp = self._compute_dual_space(p)
                self._dual_spaces[p] = sp
        return sp

    def _compute_dual_space(self, p):
        n = self.n
        if p < 0:
            return Span.zero(1, self.mode)
        if p < 2:
            return Span.full(n ** p, self.mode)
        if p == 2:
            return self.rel_span
        prev = self.koszul_dual_space(p - 1)
        shifted = {}
        for c, row in prev.pivots.items():
            for i in range(n):
                shifted[c * n + i] = {w * n + i: x for w, x in row.items()}
        left = Span(n ** p, shifted, self.mode)
        last = Span.from_vectors(n ** p, embed_relation(self.rel_span.basis, p - 2, p, n, X), self.mode)
        sp = left.intersect(last)
        head = Span.from_vectors(n ** p, embed_relation(self.rel_span.basis, 0, p, n, X), self.mode)
        if not head.contains_span(sp):
            raise InclusionError(f"A^!*_{p} is not contained in Rel (x) E^{p - 2}")
        return sp

    def dual(self):
        return dual_algebra(self)


def algebra(R):
    """The algebra with relations ``x^l x^m = R^{lm}_{vr} x^v x^r``."""
    return QuadraticAlgebra(R.n, R.relation_span(-1), "A", R.mode, R)


def algebra_prime(R):
    """The sign-flipped algebra with relations ``y^l y^m = -R^{lm}_{vr} y^v y^r``."""
    return QuadraticAlgebra(R.n, R.relation_span(+1), "Aprime", R.mode, R)


def dual_algebra(alg):
    """Quadratic algebra whose relations annihilate those of ``alg``."""
    flavor = "Adual" if alg.flavor == "A" else "custom"
    return QuadraticAlgebra(alg.n, alg.rel_span.annihilator(), flavor, alg.mode, alg.source)


def from_relations(n, vectors, mode=RATIONAL):
    return QuadraticAlgebra(n, Span.from_vectors(n * n, vectors, mode), "custom", mode)

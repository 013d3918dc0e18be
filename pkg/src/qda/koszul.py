"""Koszul complex ``K(A)`` and its comparison with ``(Omega(A), delta)``.

The weight-``w`` part of ``K_p`` is ``A_{w-p} (x) A^{!*}_p``.  Its basis is the
list of pairs ``(complement word of A_{w-p}, index into the RREF basis of
A^{!*}_p)`` in lexicographic order.  The boundary peels the first tensor
letter off and multiplies it into the algebra factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qda import kernel
from qda.bigraded import BigAlgebra
from qda.calculus import DELTA, apply
from qda.exactnum import add_into
from qda.quadalg import InclusionError, algebra
from qda.rmatrix import satisfies_axioms

EXACT = "exact"
SCALAR = "scalar"
DEFECT = "defect"


class KoszulComplex:
    def __init__(self, alg):
        self.alg = alg
        self.n = alg.n
        self.mode = alg.mode
        self._bases = {}
        self._boundaries = {}

    def dual_basis(self, p):
        if p < 0:
            return []
        return self.alg.koszul_dual_space(p).basis

    def component(self, p, w):
        """Basis pairs of ``K_p`` in weight ``w``."""
        key = (p, w)
        if key not in self._bases:
            if p < 0 or p > w:
                self._bases[key] = []
            else:
                words = self.alg.graded_basis(w - p).complement
                k = len(self.dual_basis(p))
                self._bases[key] = [(a, i) for a in words for i in range(k)]
        return self._bases[key]

    def dim(self, p, w):
        return len(self.component(p, w))

    def boundary(self, p, w):
        """Sparse matrix ``{source index: {target index: coef}}`` of ``b: K_p -> K_{p-1}``."""
        key = (p, w)
        if key in self._boundaries:
            return self._boundaries[key]
        src = self.component(p, w)
        if p <= 0 or not src:
            mat = {i: {} for i in range(len(src))}
            self._boundaries[key] = mat
            return mat
        n = self.n
        one = self.mode.one()
        tail_space = self.alg.koszul_dual_space(p - 1)
        tail_pivots = tail_space.pivot_cols
        tgt_index = {pair: i for i, pair in enumerate(self.component(p - 1, w))}
        radix = n ** (p - 1)
        # split every dual basis vector u = sum_i e_i (x) t_i once
        splits = []
        for u in self.dual_basis(p):
            tails = {}
            for word, c in u.items():
                head, rest = divmod(word, radix)
                tails.setdefault(head, {})[rest] = c
            coords = {}
            for head, t in tails.items():
                if not tail_space.contains(t):
                    raise InclusionError(
                        f"tail of a degree-{p} dual vector is outside A^!*_{p - 1}")
                coords[head] = {k: t[c] for k, c in enumerate(tail_pivots) if c in t}
            splits.append(coords)
        deg = w - p
        mat = {}
        for idx, (a, k) in enumerate(src):
            row = {}
            for head, coords in splits[k].items():
                prod = self.alg.multiply({a: one}, deg, {head: one}, 1)
                for word, c in prod.items():
                    for j, x in coords.items():
                        add_into(row, {tgt_index[(word, j)]: c * x})
            mat[idx] = row
        self._boundaries[key] = mat
        return mat

    def rank(self, p, w):
        if p <= 0 or p > w:
            return 0
        return kernel.rank_of(list(self.boundary(p, w).values()))


@dataclass
class KoszulNode:
    p: int
    w: int
    dim: int
    rank_out: int
    rank_in: int
    augmented: bool = False

    @property
    def homology(self):
        return self.dim - self.rank_out - self.rank_in


@dataclass
class KoszulReport:
    nodes: list

    def node(self, p, w):
        return next(x for x in self.nodes if x.p == p and x.w == w)

    def acyclic(self):
        """Exact in every positive degree and augmented-exact in degree 0."""
        return all(nd.homology == 0 for nd in self.nodes)

    def betti(self):
        return {(nd.p, nd.w): nd.homology for nd in self.nodes if nd.homology}


def koszul_homology(alg, N, complex_=None):
    """Homology of the weight-truncated Koszul complex, augmented at ``p = 0``."""
    K = complex_ or KoszulComplex(alg)
    nodes = []
    for w in range(N + 1):
        for p in range(w + 1):
            rank_out = K.rank(p, w)
            if p == 0:
                # the counit A_0 -> ground field is onto in weight 0
                rank_out = 1 if w == 0 and K.dim(0, 0) else 0
            nodes.append(KoszulNode(p, w, K.dim(p, w), rank_out, K.rank(p + 1, w), p == 0))
    return KoszulReport(nodes)


def check_b_squared(alg, N, complex_=None):
    K = complex_ or KoszulComplex(alg)
    for w in range(N + 1):
        for p in range(2, w + 1):
            comp = kernel.compose(K.boundary(p, w), K.boundary(p - 1, w))
            if any(comp.values()):
                return False
    return True


def check_presentation(alg, N, complex_=None):
    """Exactness of ``A (x) Rel -> A (x) E -> A -> k -> 0`` in each weight ``<= N``."""
    rep = koszul_homology(alg, N, complex_)
    ok = {}
    for w in range(N + 1):
        nodes = [rep.node(p, w) for p in (0, 1) if p <= w]
        ok[w] = all(nd.homology == 0 for nd in nodes)
    return ok


def euler_sums(alg, N):
    """``sum_k (-1)^k dim A_{m-k} dim A^!_k`` for ``1 <= m <= N``."""
    dual = alg.dual()
    return {m: sum((-1) ** k * alg.dim(m - k) * dual.dim(k) for k in range(m + 1))
            for m in range(1, N + 1)}


def dual_dims_agree(alg, N):
    """``dim A^{!*}_p == dim (A^!)_p`` for all ``p <= N``."""
    dual = alg.dual()
    return all(alg.koszul_dual_space(p).dim == dual.dim(p) for p in range(N + 1))


def complementarity(alg, alg_prime, N):
    """``A^{!*}_p`` meets the ideal of ``A'`` trivially and they fill ``E^{(x)p}``."""
    for p in range(N + 1):
        sp = alg.koszul_dual_space(p)
        ideal = alg_prime.graded_basis(p).ideal
        if sp.dim + ideal.dim != alg.n ** p or sp.intersect(ideal).dim:
            return False
    return True


class Comparison:
    """The maps ``h_p: A (x) A^{!*}_p -> Omega^p`` and diagram checks."""

    def __init__(self, R, alg=None, big=None):
        self.R = R
        self.alg = alg or algebra(R)
        self.big = big or BigAlgebra(R)
        self.K = KoszulComplex(self.alg)
        self.mode = R.mode
        # the identification A^{!*}_p ~ A'_p needs the axioms; otherwise use A^!
        self.dual_used = "Aprime" if satisfies_axioms(R) else "Adual"
        self._h = {}
        self._delta = {}

    def h(self, p, r):
        """Matrix of ``h_p`` from ``K_p`` in weight ``r + p`` to ``A^{(r,p)}``."""
        key = (p, r)
        if key in self._h:
            return self._h[key]
        big = self.big
        one = self.mode.one()
        basis = self.K.dual_basis(p)
        yvecs = [big.y_vector(u, p) for u in basis]
        shift = big.base ** p
        mat = {}
        for idx, (a, k) in enumerate(self.K.component(p, r + p)):
            xa = big.x_word(a, r)
            img = {}
            for yw, c in yvecs[k].items():
                add_into(img, {xa * shift + yw: c})
            mat[idx] = big.nf(r, p, img)
        self._h[key] = mat
        return mat

    def delta_block(self, r, s):
        key = (r, s)
        if key not in self._delta:
            one = self.mode.one()
            self._delta[key] = {w: apply(DELTA, self.big, r, s, {w: one})
                                for w in self.big.bidegree_basis(r, s).complement}
        return self._delta[key]

    def iso_check(self, p):
        """The letter-level map ``A^{!*}_p -> A'_p`` (or ``A^!_p``) is bijective."""
        basis = self.K.dual_basis(p)
        if self.dual_used == "Aprime":
            images = [self.big.nf(0, p, self.big.y_vector(u, p)) for u in basis]
            target = self.big.dim(0, p)
        else:
            dual = self.alg.dual()
            images = [dual.normal_form(p, u) for u in basis]
            target = dual.dim(p)
        return kernel.rank_of(images) == len(basis) == target

    def surjectivity(self, p, N):
        """``{weight: (surjective, kernel dim)}`` for ``h_p``."""
        out = {}
        for w in range(p, N + 1):
            r = w - p
            mat = self.h(p, r)
            rk = kernel.rank_of(list(mat.values()))
            out[w] = (rk == self.big.dim(r, p), len(mat) - rk)
        return out

    def square(self, p, w):
        """``(h_{p-1} o b, delta o h_p)`` on ``K_p`` in weight ``w``."""
        r = w - p
        via_b = kernel.compose(self.K.boundary(p, w), self.h(p - 1, r + 1))
        via_delta = kernel.compose(self.h(p, r), self.delta_block(r, p))
        return via_b, via_delta


@dataclass
class DiagramRow:
    p: int
    status: str
    scalar: object = None
    surjective: dict = field(default_factory=dict)
    kernel_dims: dict = field(default_factory=dict)
    defect_ranks: dict = field(default_factory=dict)
    iso: bool = True


@dataclass
class ComparisonReport:
    dual_used: str
    rows: list
    freeness: list

    def row(self, p):
        return next(x for x in self.rows if x.p == p)

    def all_surjective(self):
        return all(ok for row in self.rows for ok in row.surjective.values())

    def end_proportional(self):
        return all(self.row(p).status != DEFECT for p in (1, 2) if any(x.p == p for x in self.rows))


def _proportionality(pairs):
    """Common ``c`` with ``via_delta == c * via_b`` across all weights."""
    c = None
    for via_b, via_delta in pairs:
        for i, row in via_b.items():
            for j, x in row.items():
                y = via_delta.get(i, {}).get(j)
                if y is None:
                    return None
                cand = y / x
                if c is None:
                    c = cand
                elif c != cand:
                    return None
    if c is None or not c:
        return None
    for via_b, via_delta in pairs:
        for i in set(via_b) | set(via_delta):
            scaled = {j: x * c for j, x in via_b.get(i, {}).items()}
            if scaled != via_delta.get(i, {}):
                return None
    return c


def classify(pairs):
    """Status of one diagram row from its ``(via_b, via_delta)`` pairs.

    Returns ``(status, scalar, defect_ranks)`` where ``defect_ranks`` lists the
    rank of ``via_delta - via_b`` per pair when no common scalar exists.
    """
    if all(vb == vd for vb, vd in pairs):
        return EXACT, None, []
    c = _proportionality(pairs)
    if c is not None:
        return SCALAR, c, []
    ranks = []
    for vb, vd in pairs:
        diff = {}
        for i in set(vb) | set(vd):
            d = dict(vd.get(i, {}))
            add_into(d, vb.get(i, {}), -1)
            diff[i] = d
        ranks.append(kernel.rank_of(list(diff.values())))
    return DEFECT, None, ranks


def check_diagram(R, N, comparison=None):
    cmp = comparison or Comparison(R)
    rows = []
    for p in range(N + 1):
        surj = cmp.surjectivity(p, N)
        row = DiagramRow(p, EXACT, surjective={w: ok for w, (ok, _) in surj.items()},
                         kernel_dims={w: k for w, (_, k) in surj.items()},
                         iso=cmp.iso_check(p))
        if p:
            # for p = 0 both compositions land in degree -1, which is zero
            weights = range(p, N + 1)
            status, c, ranks = classify([cmp.square(p, w) for w in weights])
            row.status, row.scalar = status, c
            row.defect_ranks = dict(zip(weights, ranks))
        rows.append(row)
    return ComparisonReport(cmp.dual_used, rows, cmp.big.check_freeness_dims(N, cmp.alg))

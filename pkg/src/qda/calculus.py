"""Differential ``d`` and codifferential ``delta`` on the bigraded algebra.

``d`` sends ``x^l`` to ``y^l`` and kills ``y``; ``delta`` sends ``y^l`` to
``x^l`` and kills ``x``.  Both are antiderivations for the y-degree, so on a
word each replaced letter picks up ``(-1)`` to the number of y-letters to its
left.  ``d`` has bidegree ``(-1, +1)`` and ``delta`` has ``(+1, -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qda import kernel
from qda.exactnum import add_into, scale_vec
from qda.tensorspace import letters, ordinal

D = "d"
DELTA = "delta"


def shift(name):
    if name == D:
        return (-1, 1)
    if name == DELTA:
        return (1, -1)
    raise ValueError(f"unknown map {name!r}")


def target_block(name, r, s):
    dr, ds = shift(name)
    return r + dr, s + ds


def free_word_image(name, word, m, n, one):
    """Image of one XY word under the free-level antiderivation."""
    seq = letters(word, m, 2 * n)
    out = {}
    ys = 0
    for k, c in enumerate(seq):
        is_y = c >= n
        if (name == D and not is_y) or (name == DELTA and is_y):
            new = list(seq)
            new[k] = c + n if name == D else c - n
            add_into(out, {ordinal(new, 2 * n): -one if ys % 2 else one})
        if is_y:
            ys += 1
    return out


def free_level_map(name, vec, m, n, one):
    out = {}
    for w, c in vec.items():
        add_into(out, free_word_image(name, w, m, n, one), c)
    return out


@dataclass
class WellDefinedResult:
    name: str
    r: int
    s: int
    ok: bool
    witness: dict | None = None


@dataclass
class DegreeMap:
    """Induced map on complement bases, one sparse matrix per source block."""

    name: str
    blocks: dict = field(default_factory=dict)

    def block(self, r, s):
        return self.blocks[(r, s)]


def apply(name, big, r, s, vec):
    """Apply ``d`` or ``delta`` to an element of ``A^{(r,s)}``; result in normal form."""
    tr, ts = target_block(name, r, s)
    if tr < 0 or ts < 0:
        return {}
    img = free_level_map(name, vec, r + s, big.n, big.mode.one())
    return big.nf(tr, ts, img)


def verify_well_defined(name, big, N):
    """Check that the free-level map sends every ideal component into the ideal."""
    out = []
    one = big.mode.one()
    for m in range(N + 1):
        for s in range(m + 1):
            r = m - s
            tr, ts = target_block(name, r, s)
            if tr < 0 or ts < 0:
                out.append(WellDefinedResult(name, r, s, True))
                continue
            tgt = big.bidegree_basis(tr, ts)
            witness = None
            for v in big.bidegree_basis(r, s).ideal.basis:
                if tgt.nf(free_level_map(name, v, m, big.n, one)):
                    witness = v
                    break
            out.append(WellDefinedResult(name, r, s, witness is None, witness))
    return out


def degree_map(name, big, N):
    """Induced matrices on every block with ``r + s <= N``."""
    dm = DegreeMap(name)
    one = big.mode.one()
    for m in range(N + 1):
        for s in range(m + 1):
            r = m - s
            src = big.bidegree_basis(r, s)
            dm.blocks[(r, s)] = {w: apply(name, big, r, s, {w: one}) for w in src.complement}
    return dm


def _is_zero_map(mat):
    return all(not row for row in mat.values())


def check_squared(name, big, N, dm=None):
    """``name o name = 0`` on every block with ``r + s <= N``."""
    dm = dm or degree_map(name, big, N)
    for (r, s), mat in dm.blocks.items():
        tr, ts = target_block(name, r, s)
        nxt = dm.blocks.get((tr, ts), {})
        if not _is_zero_map(kernel.compose(mat, nxt)):
            return False
    return True


def check_d_squared(big, N, dm=None):
    return check_squared(D, big, N, dm)


def check_delta_squared(big, N, dm=None):
    return check_squared(DELTA, big, N, dm)


def laplacian_block(big, r, s, dmap, deltamap):
    """Matrix of ``d delta + delta d`` on ``A^{(r,s)}``."""
    out = {}
    for w in big.bidegree_basis(r, s).complement:
        acc = {}
        for first, second, f in ((deltamap, dmap, DELTA), (dmap, deltamap, D)):
            img = first[(r, s)][w]
            tb = target_block(f, r, s)
            if not img:
                continue
            nxt = second.get(tb, {})
            for u, c in img.items():
                add_into(acc, nxt.get(u, {}), c)
        out[w] = acc
    return out


def check_laplacian(big, N, dm=None, deltam=None):
    """Per-block flag for ``d delta + delta d == (r + s) * identity``."""
    dm = dm or degree_map(D, big, N + 1)
    deltam = deltam or degree_map(DELTA, big, N + 1)
    res = {}
    for m in range(N + 1):
        for s in range(m + 1):
            r = m - s
            lap = laplacian_block(big, r, s, dm.blocks, deltam.blocks)
            scalar = big.mode.coerce(m)
            res[(r, s)] = all(row == ({w: scalar} if m else {}) for w, row in lap.items())
    return res


@dataclass
class HomologyNode:
    r: int
    s: int
    dim: int
    rank_out: int
    rank_in: int
    certified: bool = True

    @property
    def homology(self):
        return self.dim - self.rank_out - self.rank_in


@dataclass
class HomologyReport:
    name: str
    nodes: list
    augmented: dict = field(default_factory=dict)

    def trivial(self):
        """Homology is the ground field at (0, 0) and vanishes elsewhere."""
        for nd in self.nodes:
            if not nd.certified:
                continue
            expect = 1 if (nd.r, nd.s) == (0, 0) else 0
            if nd.homology != expect:
                return False
        return True


def _ranks(dm):
    return {k: kernel.rank_of(list(mat.values())) for k, mat in dm.blocks.items()}


def homology(name, big, N, dm=None):
    """Homology along each total-degree line ``r + s = t <= N``.

    Both maps preserve ``r + s``, so every node of degree ``<= N`` has its
    incoming and outgoing maps inside the computed range.
    """
    dm = dm or degree_map(name, big, N)
    ranks = _ranks(dm)
    dr, ds = shift(name)
    nodes = []
    for m in range(N + 1):
        for s in range(m + 1):
            r = m - s
            rank_in = ranks.get((r - dr, s - ds), 0)
            nodes.append(HomologyNode(r, s, big.dim(r, s), ranks[(r, s)], rank_in))
    rep = HomologyReport(name, nodes)
    if name == DELTA:
        # augmented by the projection onto degree 0 at the end of each line
        for m in range(N + 1):
            nd = next(x for x in nodes if (x.r, x.s) == (m, 0))
            eps_rank = 1 if m == 0 and nd.dim else 0
            rep.augmented[m] = nd.dim - eps_rank - nd.rank_in
    return rep


def homology_d(big, N, dm=None):
    return homology(D, big, N, dm)


def homology_delta(big, N, dm=None):
    return homology(DELTA, big, N, dm)


def resolution_exact(rep):
    """The delta-complex augmented by the counit is exact at every certified node."""
    if rep.name != DELTA:
        raise ValueError("resolution exactness concerns the delta complex")
    inner = all(nd.homology == 0 for nd in rep.nodes if nd.s > 0)
    return inner and all(h == 0 for h in rep.augmented.values())


def augmentation(alg, m, vec):
    """Counit: the coefficient of the unit in degree 0, zero in positive degree."""
    if m:
        return alg.mode.zero()
    return vec.get(0, alg.mode.zero())


def primitive(big, r, s, vec):
    """A ``d``-primitive ``delta(a) / (r + s)`` of a ``d``-closed element ``a``."""
    m = r + s
    if m == 0:
        raise ValueError("degree-0 elements have no primitive")
    if apply(D, big, r, s, vec):
        raise ValueError("element is not d-closed")
    return scale_vec(apply(DELTA, big, r, s, vec), 1 / big.mode.coerce(m))


def check_leibniz(name, big, a, ab, b, bb):
    """``f(ab) == f(a) b + (-1)^q a f(b)`` with ``q`` the y-degree of ``a``."""
    prod = big.big_multiply(a, ab, b, bb)
    lhs = apply(name, big, ab[0] + bb[0], ab[1] + bb[1], prod)
    fa = apply(name, big, ab[0], ab[1], a)
    fb = apply(name, big, bb[0], bb[1], b)
    ta = target_block(name, *ab)
    tb = target_block(name, *bb)
    rhs = {}
    if fa:
        add_into(rhs, big.big_multiply(fa, ta, b, bb))
    if fb:
        sign = -1 if ab[1] % 2 else 1
        add_into(rhs, big.big_multiply(a, ab, fb, tb), sign)
    return lhs == rhs

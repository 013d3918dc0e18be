"""Naive reference computation of component dimensions.

Deliberately shares nothing with the optimized pipeline beyond reading the
R-matrix entries: relations are rebuilt with ``fractions.Fraction``, every slot
placement over the whole ``(2n)^m`` word space is generated (no bihomogeneous
filtering, no recursion on degree), and elimination is a plain textbook loop.
Only meant for small cases (``n = 2``, degree ``<= 4``).
"""

from fractions import Fraction
from itertools import product


def _frac(x):
    return Fraction(int(x.numerator), int(x.denominator))


def _pivot_columns(vectors):
    pivots = {}
    for vec in vectors:
        v = {k: c for k, c in vec.items() if c}
        while v:
            hit = [c for c in v if c in pivots]
            if not hit:
                break
            c = min(hit)
            a = v[c]
            for k, x in pivots[c].items():
                v[k] = v.get(k, 0) - a * x
                if v[k] == 0:
                    del v[k]
        if v:
            lead = min(v)
            inv = 1 / v[lead]
            pivots[lead] = {k: x * inv for k, x in v.items()}
    return set(pivots)


def _relations(R, alphabet):
    n = R.n
    E = [[_frac(x) for x in row] for row in R.dense]
    rels = []
    # (left letter offset, right letter offset, image offsets, sign)
    if alphabet == "X":
        fams = [(0, 0, 0, 0, -1)]
        base = n
    else:
        fams = [(0, 0, 0, 0, -1), (0, n, n, 0, -1), (n, 0, 0, n, -1), (n, n, n, n, 1)]
        base = 2 * n
    for tl, tr, il, ir, sign in fams:
        for lam, mu in product(range(n), repeat=2):
            v = {}
            key = (tl + lam) * base + tr + mu
            v[key] = v.get(key, 0) + 1
            for nu, rho in product(range(n), repeat=2):
                c = E[lam * n + mu][nu * n + rho]
                if c:
                    k = (il + nu) * base + ir + rho
                    v[k] = v.get(k, 0) + sign * c
            rels.append(v)
    return rels, base


def _ideal_pivots(rels, base, m):
    gens = []
    for j in range(m - 1):
        for left in range(base ** j):
            for right in range(base ** (m - j - 2)):
                for v in rels:
                    gens.append({(left * base ** 2 + t) * base ** (m - j - 2) + right: c
                                 for t, c in v.items()})
    return _pivot_columns(gens)


def naive_hilbert(R, N, sign=-1):
    """Degree ``0..N`` dimensions from relations ``x^l x^m + sign * R(x^l x^m)``.

    ``sign=-1`` gives the algebra of ``R``; ``sign=+1`` the sign-flipped one.
    """
    if sign == -1:
        rels, base = _relations(R, "X")
    else:
        flipped = _NegView(R)
        rels, base = _relations(flipped, "X")
    out = []
    for m in range(N + 1):
        out.append(base ** m - (len(_ideal_pivots(rels, base, m)) if m >= 2 else 0))
    return out


def naive_bigraded_dims(R, N):
    """``{(r, s): dim A^{(r,s)}}`` for ``r + s <= N`` from the full word space."""
    rels, base = _relations(R, "XY")
    n = R.n
    dims = {}
    for m in range(N + 1):
        piv = _ideal_pivots(rels, base, m) if m >= 2 else set()
        counts = {}
        for w in range(base ** m):
            s, t = 0, w
            for _ in range(m):
                t, c = divmod(t, base)
                s += c >= n
            key = (m - s, s)
            counts[key] = counts.get(key, 0) + (w not in piv)
        for s in range(m + 1):
            dims[(m - s, s)] = counts.get((m - s, s), 0)
    return dims


class _NegView:
    def __init__(self, R):
        self.n = R.n
        self.dense = [[-x for x in row] for row in R.dense]

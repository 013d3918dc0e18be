"""Word bases of tensor powers and slot placements of 2-tensor subspaces.

A word of length ``m`` is stored as an integer in base ``n`` (alphabet ``X``)
or ``2n`` (alphabet ``XY``), first letter most significant, so integer order
is lexicographic order.  In the ``XY`` alphabet letter ``x_i`` has code ``i``
and ``y_i`` has code ``n + i``; hence every ``x`` precedes every ``y``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb

X = "X"
XY = "XY"


def base_of(n, alphabet):
    if alphabet == X:
        return n
    if alphabet == XY:
        return 2 * n
    raise ValueError(f"unknown alphabet {alphabet!r}")


def letters(word, m, base):
    out = [0] * m
    for i in range(m - 1, -1, -1):
        word, out[i] = divmod(word, base)
    return tuple(out)


def ordinal(seq, base):
    w = 0
    for c in seq:
        w = w * base + c
    return w


def y_count(seq, n):
    return sum(1 for c in seq if c >= n)


def bidegree_of(word, m, n):
    """``(r, s)`` = (number of x letters, number of y letters) of an XY word."""
    s = y_count(letters(word, m, 2 * n), n)
    return m - s, s


@lru_cache(maxsize=None)
def block_words(n, r, s):
    """Sorted XY words with ``r`` x-letters and ``s`` y-letters."""
    m = r + s
    out = []
    for ypos in combinations(range(m), s):
        yset = set(ypos)
        for idx in product(range(n), repeat=m):
            out.append(ordinal([i + n if k in yset else i for k, i in enumerate(idx)], 2 * n))
    out.sort()
    return tuple(out)


def block_dim(n, r, s):
    return comb(r + s, r) * n ** (r + s)


class WordBasis:
    """Ordered word basis of ``E^{(x)m}`` or of one bihomogeneous XY block."""

    def __init__(self, n, m, alphabet=X, bidegree=None):
        self.n = n
        self.m = m
        self.alphabet = alphabet
        self.base = base_of(n, alphabet)
        if alphabet == XY:
            if bidegree is None or sum(bidegree) != m:
                raise ValueError("XY word basis needs a bidegree (r, s) with r + s = m")
            self.bidegree = tuple(bidegree)
            self.words = block_words(n, *self.bidegree)
        else:
            self.bidegree = None
            self.words = tuple(range(n ** m))
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def dim(self):
        return len(self.words)

    def word(self, i):
        return letters(self.words[i], self.m, self.base)

    def ordinal_of(self, seq):
        return self.index[ordinal(seq, self.base)]


def word_sign_prefix(seq, position, n):
    """``(-1)`` to the number of y-letters strictly left of ``position``."""
    if not 0 <= position < len(seq):
        raise IndexError(f"position {position} out of range for word of length {len(seq)}")
    return -1 if y_count(seq[:position], n) % 2 else 1


def _contexts(length, base, n, xcount):
    if xcount is None:
        return range(base ** length)
    if xcount < 0 or xcount > length:
        return ()
    return block_words(n, xcount, length - xcount)


def vector_bidegree(vec, n):
    """Bidegree shared by all words of a 2-letter XY vector, or ``None``."""
    degs = {bidegree_of(w, 2, n) for w in vec}
    return degs.pop() if len(degs) == 1 else None


def embed_relation(rel_vectors, j, m, n, alphabet=X, bidegree=None):
    """All ``u (x) v (x) w`` with ``v`` in ``rel_vectors`` placed at slot ``j``.

    ``u`` runs over words of length ``j`` and ``w`` over words of length
    ``m - j - 2``.  With ``bidegree=(r, s)`` (XY alphabet only) only the
    products landing in block ``(r, s)`` are produced.
    """
    if not 0 <= j <= m - 2:
        raise IndexError(f"slot {j} out of range for degree {m}")
    base = base_of(n, alphabet)
    right_len = m - j - 2
    shift_v = base ** right_len
    shift_u = base ** (m - j)
    out = []
    for v in rel_vectors:
        if not v:
            continue
        if bidegree is not None:
            if alphabet != XY:
                raise ValueError("bidegree filter needs the XY alphabet")
            vdeg = vector_bidegree(v, n)
            if vdeg is None:
                raise ValueError("relation vector is not bihomogeneous")
            ctx_x = bidegree[0] - vdeg[0]
            if ctx_x < 0 or bidegree[1] - vdeg[1] < 0:
                continue
            for xl in range(0, min(j, ctx_x) + 1):
                xr = ctx_x - xl
                for u in _contexts(j, base, n, xl):
                    for w in _contexts(right_len, base, n, xr):
                        off = u * shift_u + w
                        out.append({off + t * shift_v: c for t, c in v.items()})
        else:
            for u in range(base ** j):
                for w in range(base ** right_len):
                    off = u * shift_u + w
                    out.append({off + t * shift_v: c for t, c in v.items()})
    return out

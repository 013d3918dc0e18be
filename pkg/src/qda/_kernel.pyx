# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse exact row reduction; same contract as ``_kernel_py``.

Updates ``t - a*r`` on gmpy2 rationals go straight to GMP through gmpy2's C
API; any other scalar type (Gaussian rationals) takes the generic path.
"""

from heapq import heapify, heappop, heappush

from gmpy2 cimport GMPy_MPQ_New, MPQ_Check, import_gmpy2, mpq, mpq_t

cdef extern from "gmp.h":
    void mpq_mul(mpq_t, const mpq_t, const mpq_t)
    void mpq_sub(mpq_t, const mpq_t, const mpq_t)
    void mpq_add(mpq_t, const mpq_t, const mpq_t)
    void mpq_neg(mpq_t, const mpq_t)
    int mpq_sgn(const mpq_t)

import_gmpy2()


cdef inline object _submul(object t, object a, object r):
    """``t - a*r`` (``t is None`` meaning zero); returns ``None`` for zero."""
    cdef mpq res
    if MPQ_Check(a) and MPQ_Check(r) and (t is None or MPQ_Check(t)):
        res = GMPy_MPQ_New(NULL)
        mpq_mul(res.q, (<mpq>a).q, (<mpq>r).q)
        if t is None:
            mpq_neg(res.q, res.q)
        else:
            mpq_sub(res.q, (<mpq>t).q, res.q)
        return res if mpq_sgn(res.q) else None
    out = -(a * r) if t is None else t - a * r
    return out if out else None


cdef inline object _addmul(object t, object a, object r):
    cdef mpq res
    if MPQ_Check(a) and MPQ_Check(r) and (t is None or MPQ_Check(t)):
        res = GMPy_MPQ_New(NULL)
        mpq_mul(res.q, (<mpq>a).q, (<mpq>r).q)
        if t is not None:
            mpq_add(res.q, (<mpq>t).q, res.q)
        return res if mpq_sgn(res.q) else None
    out = a * r if t is None else t + a * r
    return out if out else None


cpdef dict reduce_vector(dict vec, dict pivots):
    cdef dict v = dict(vec)
    cdef list heap = [c for c in v if c in pivots]
    cdef object c, a, j, r, t
    heapify(heap)
    while heap:
        c = heappop(heap)
        a = v.get(c)
        if a is None:
            continue
        for j, r in (<dict>pivots[c]).items():
            t = v.get(j)
            u = _submul(t, a, r)
            if u is None:
                del v[j]
            else:
                v[j] = u
                if t is None and j in pivots:
                    heappush(heap, j)
    return v


cpdef dict reduce_full(dict vec, dict pivots):
    cdef dict v = dict(vec)
    cdef list cols = [c for c in vec if c in pivots]
    cdef object c, a, j, r, u
    for c in cols:
        a = v.get(c)
        if a is None:
            continue
        for j, r in (<dict>pivots[c]).items():
            u = _submul(v.get(j), a, r)
            if u is None:
                del v[j]
            else:
                v[j] = u
    return v


cpdef object insert_vector(dict vec, dict pivots):
    cdef dict v = reduce_vector(vec, pivots)
    cdef object c, inv, j, x
    if not v:
        return None
    c = min(v)
    inv = 1 / v[c]
    pivots[c] = {j: x * inv for j, x in v.items()}
    return c


cpdef void back_substitute(dict pivots):
    cdef dict row
    cdef list hits
    cdef object c, j, a, k, r, u
    for c in sorted(pivots, reverse=True):
        row = <dict>pivots[c]
        hits = [j for j in row if j != c and j in pivots]
        for j in hits:
            a = row.get(j)
            if a is None:
                continue
            for k, r in (<dict>pivots[j]).items():
                u = _submul(row.get(k), a, r)
                if u is None:
                    del row[k]
                else:
                    row[k] = u


cpdef int rank_of(object rows):
    cdef dict pivots = {}
    cdef int n = 0
    for row in rows:
        if row and insert_vector(row, pivots) is not None:
            n += 1
    return n


cpdef dict compose(dict first, dict second):
    cdef dict out = {}
    cdef dict acc, row
    cdef object src, img, mid, a, k, r, u
    for src, img in first.items():
        acc = {}
        for mid, a in (<dict>img).items():
            row = second.get(mid)
            if not row:
                continue
            for k, r in row.items():
                u = _addmul(acc.get(k), a, r)
                if u is None:
                    acc.pop(k, None)
                else:
                    acc[k] = u
        out[src] = acc
    return out

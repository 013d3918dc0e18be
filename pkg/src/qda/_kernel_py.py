"""Sparse exact row reduction, pure-Python implementation.

Vectors are dicts ``{column: scalar}`` that never store zeros.  A pivot table
maps a pivot column to a row whose entry there is 1 and which has no entries
to the left of it (semi-echelon).  After :func:`back_substitute` every row is
also zero on all other pivot columns (reduced echelon form).

This module mirrors ``_kernel.pyx`` line for line; it is selected when the
compiled extension is unavailable.
"""

from heapq import heapify, heappop, heappush


def reduce_vector(vec, pivots):
    """Eliminate every pivot column from ``vec`` (semi-echelon pivots)."""
    v = dict(vec)
    heap = [c for c in v if c in pivots]
    heapify(heap)
    while heap:
        c = heappop(heap)
        a = v.get(c)
        if a is None:
            continue
        for j, r in pivots[c].items():
            t = v.get(j)
            if t is None:
                v[j] = -(a * r)
                if j in pivots:
                    heappush(heap, j)
            else:
                t = t - a * r
                if t:
                    v[j] = t
                else:
                    del v[j]
    return v


def reduce_full(vec, pivots):
    """Eliminate pivot columns when ``pivots`` is fully reduced.

    One pass suffices because no pivot row touches another pivot column.
    """
    v = dict(vec)
    for c in [c for c in vec if c in pivots]:
        a = v.get(c)
        if a is None:
            continue
        for j, r in pivots[c].items():
            t = v.get(j)
            if t is None:
                v[j] = -(a * r)
            else:
                t = t - a * r
                if t:
                    v[j] = t
                else:
                    del v[j]
    return v


def insert_vector(vec, pivots):
    """Add ``vec`` to a semi-echelon pivot table.

    Returns the new pivot column, or ``None`` if ``vec`` was dependent.
    """
    v = reduce_vector(vec, pivots)
    if not v:
        return None
    c = min(v)
    inv = 1 / v[c]
    pivots[c] = {j: x * inv for j, x in v.items()}
    return c


def back_substitute(pivots):
    """Bring a semi-echelon pivot table to reduced echelon form in place."""
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        hits = [j for j in row if j != c and j in pivots]
        if not hits:
            continue
        for j in hits:
            a = row.get(j)
            if a is None:
                continue
            for k, r in pivots[j].items():
                t = row.get(k)
                if t is None:
                    row[k] = -(a * r)
                else:
                    t = t - a * r
                    if t:
                        row[k] = t
                    else:
                        del row[k]


def rank_of(rows):
    pivots = {}
    n = 0
    for row in rows:
        if row and insert_vector(row, pivots) is not None:
            n += 1
    return n


def compose(first, second):
    """Sparse product: apply ``first`` then ``second``.

    Both are ``{source: {target: coef}}`` maps.
    """
    out = {}
    for src, img in first.items():
        acc = {}
        for mid, a in img.items():
            row = second.get(mid)
            if not row:
                continue
            for k, r in row.items():
                t = acc.get(k)
                if t is None:
                    acc[k] = a * r
                else:
                    t = t + a * r
                    if t:
                        acc[k] = t
                    else:
                        del acc[k]
        out[src] = acc
    return out

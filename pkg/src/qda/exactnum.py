"""Exact scalars and sparse exact linear algebra.

Two scalar modes exist: rationals (``gmpy2.mpq``) and Gaussian rationals
(:class:`GaussQ`, a pair of ``mpq``).  Vectors are sparse dicts
``{index: scalar}`` without stored zeros; a :class:`Span` keeps the unique
reduced row echelon basis of a subspace.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq

from qda import kernel


class ModeError(ValueError):
    """Scalars of different modes were combined."""


class DimensionError(ValueError):
    """Ambient dimensions of two operands differ."""


class GaussQ:
    """Gaussian rational ``re + im*i`` with exact ``mpq`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussQ):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return GaussQ(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussQ(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussQ((self.re * o.re + self.im * o.im) / den,
                      (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussQ(self.re, -self.im)

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


_MPQ = type(mpq(0))
_FRACTION = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(token):
    """Parse ``"p/q"``, ``"p"`` or an int exactly; decimals are rejected."""
    if isinstance(token, bool):
        raise ValueError(f"not an exact scalar: {token!r}")
    if isinstance(token, int):
        return mpq(token)
    if not isinstance(token, str):
        raise ValueError(f"not an exact scalar: {token!r}")
    m = _FRACTION.match(token)
    if not m:
        raise ValueError(f"not an exact fraction string: {token!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return mpq(num, den)


def format_rational(x):
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Mode:
    """A scalar field: rationals or Gaussian rationals."""

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return f"Mode({self.name!r})"

    @property
    def complex(self):
        return self is GAUSSIAN

    def zero(self):
        return GaussQ() if self.complex else mpq(0)

    def one(self):
        return GaussQ(1) if self.complex else mpq(1)

    def coerce(self, x):
        if self.complex:
            if isinstance(x, GaussQ):
                return x
            return GaussQ(x, 0)
        if isinstance(x, GaussQ):
            raise ModeError("Gaussian rational used in rational mode")
        return mpq(x)

    def parse(self, token):
        if isinstance(token, dict):
            if not self.complex:
                raise ModeError("complex scalar given in rational mode")
            extra = set(token) - {"re", "im"}
            if extra:
                raise ValueError(f"unexpected keys in scalar: {sorted(extra)}")
            return GaussQ(parse_rational(token.get("re", "0")),
                          parse_rational(token.get("im", "0")))
        q = parse_rational(token)
        return GaussQ(q) if self.complex else q

    def dump(self, x):
        """Serialize a scalar for the JSON wire format."""
        if self.complex:
            x = self.coerce(x)
            return {"re": format_rational(x.re), "im": format_rational(x.im)}
        return format_rational(x)

    def text(self, x):
        if self.complex:
            x = self.coerce(x)
            if not x.im:
                return format_rational(x.re)
            if not x.re:
                return f"{format_rational(x.im)}i"
            sign = "-" if x.im < 0 else "+"
            return f"{format_rational(x.re)}{sign}{format_rational(abs(x.im))}i"
        return format_rational(x)

    def conj(self, x):
        return x.conjugate() if self.complex else x


RATIONAL = Mode("rational")
GAUSSIAN = Mode("gaussian-rational")
MODES = {RATIONAL.name: RATIONAL, GAUSSIAN.name: GAUSSIAN}


def mode_of(x):
    if isinstance(x, GaussQ):
        return GAUSSIAN
    if isinstance(x, (int, Fraction, _MPQ)) and not isinstance(x, bool):
        return RATIONAL
    raise TypeError(f"not an exact scalar: {x!r}")


def conj_vec(vec):
    return {k: (x.conjugate() if isinstance(x, GaussQ) else x) for k, x in vec.items()}


def scale_vec(vec, c):
    if not c:
        return {}
    return {k: x * c for k, x in vec.items()}


def add_into(acc, vec, c=1):
    """``acc += c * vec`` in place, dropping zeros."""
    for k, x in vec.items():
        t = acc.get(k)
        t = x * c if t is None else t + x * c
        if t:
            acc[k] = t
        else:
            acc.pop(k, None)
    return acc


class Matrix:
    """Exact matrix stored as sparse rows, with a fixed scalar mode."""

    __slots__ = ("rows", "ncols", "mode")

    def __init__(self, rows, ncols, mode=RATIONAL):
        self.rows = [dict(r) for r in rows]
        self.ncols = ncols
        self.mode = mode

    @classmethod
    def from_dense(cls, data, mode=None):
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged rows")
        # plain ints are mode-neutral literals
        modes = {mode_of(x) for r in data for x in r if not isinstance(x, int)}
        if len(modes) > 1:
            raise ModeError("mixed scalar modes in matrix")
        found = modes.pop() if modes else None
        if mode is None:
            mode = found or RATIONAL
        elif found is not None and found is not mode:
            raise ModeError(f"entries do not match mode {mode.name}")
        rows = [{j: mode.coerce(x) for j, x in enumerate(r) if x} for r in data]
        return cls(rows, ncols, mode)

    @classmethod
    def identity(cls, k, mode=RATIONAL):
        one = mode.one()
        return cls([{i: one} for i in range(k)], k, mode)

    @property
    def nrows(self):
        return len(self.rows)

    def to_dense(self):
        z = self.mode.zero()
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.mode is other.mode
                and self.ncols == other.ncols and self.rows == other.rows)

    def __matmul__(self, other):
        if self.mode is not other.mode:
            raise ModeError("matrix product of different scalar modes")
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions differ")
        first = {i: r for i, r in enumerate(self.rows)}
        second = {i: r for i, r in enumerate(other.rows) if r}
        out = kernel.compose(first, second)
        return Matrix([out[i] for i in range(self.nrows)], other.ncols, self.mode)

    def transpose(self):
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return Matrix(cols, self.nrows, self.mode)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.mode.name})"


def _echelon(rows):
    pivots = {}
    for r in rows:
        if r:
            kernel.insert_vector(r, pivots)
    kernel.back_substitute(pivots)
    return pivots


def rref(m):
    """Reduced row echelon form and pivot columns of ``m``."""
    pivots = _echelon(m.rows)
    cols = sorted(pivots)
    return Matrix([pivots[c] for c in cols], m.ncols, m.mode), cols


def rank(m):
    return kernel.rank_of(m.rows)


def kernel_basis(m):
    """Right null space of ``m`` as sparse vectors, one per free column."""
    return Span.from_vectors(m.ncols, m.rows, m.mode).annihilator().basis


class Span:
    """Subspace of an ``ambient``-dimensional coordinate space, kept in RREF.

    ``pivots`` maps pivot column to the basis row for that column.
    """

    __slots__ = ("ambient", "mode", "pivots")

    def __init__(self, ambient, pivots, mode=RATIONAL):
        self.ambient = ambient
        self.mode = mode
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, ambient, vectors, mode=RATIONAL):
        return cls(ambient, _echelon(vectors), mode)

    @classmethod
    def full(cls, ambient, mode=RATIONAL):
        one = mode.one()
        return cls(ambient, {i: {i: one} for i in range(ambient)}, mode)

    @classmethod
    def zero(cls, ambient, mode=RATIONAL):
        return cls(ambient, {}, mode)

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def pivot_cols(self):
        return sorted(self.pivots)

    @property
    def basis(self):
        return [self.pivots[c] for c in sorted(self.pivots)]

    def _check(self, other):
        if self.ambient != other.ambient:
            raise DimensionError(f"ambient {self.ambient} != {other.ambient}")
        if self.mode is not other.mode:
            raise ModeError("spans over different scalar modes")

    def reduce(self, vec):
        """Unique representative of ``vec + self`` vanishing on pivot columns."""
        return kernel.reduce_full(vec, self.pivots)

    def contains(self, vec):
        return not self.reduce(vec)

    def contains_span(self, other):
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vec):
        """Coordinates of a member in the RREF basis (its pivot values)."""
        if not self.contains(vec):
            raise ValueError("vector not in span")
        return [vec.get(c, self.mode.zero()) for c in sorted(self.pivots)]

    def __add__(self, other):
        self._check(other)
        pivots = {c: dict(r) for c, r in self.pivots.items()}
        for r in other.basis:
            kernel.insert_vector(r, pivots)
        kernel.back_substitute(pivots)
        return Span(self.ambient, pivots, self.mode)

    def intersect(self, other):
        """Zassenhaus intersection."""
        self._check(other)
        d = self.ambient
        rows = []
        for r in self.basis:
            aug = dict(r)
            for j, x in r.items():
                aug[j + d] = x
            rows.append(aug)
        rows.extend(other.basis)
        piv = {}
        for r in rows:
            kernel.insert_vector(r, piv)
        kernel.back_substitute(piv)
        inter = [{j - d: x for j, x in row.items()} for c, row in piv.items() if c >= d]
        return Span.from_vectors(d, inter, self.mode)

    def annihilator(self):
        """``{v : <b, v> = 0 for every basis row b}`` under the bilinear dot."""
        free = [j for j in range(self.ambient) if j not in self.pivots]
        one = self.mode.one()
        by_col = {}
        for c, row in self.pivots.items():
            for j, x in row.items():
                if j != c:
                    by_col.setdefault(j, []).append((c, x))
        vecs = []
        for f in free:
            v = {f: one}
            for c, x in by_col.get(f, ()):
                v[c] = -x
            vecs.append(v)
        return Span.from_vectors(self.ambient, vecs, self.mode)

    def __eq__(self, other):
        return (isinstance(other, Span) and self.ambient == other.ambient
                and self.mode is other.mode and self.pivots == other.pivots)

    def __repr__(self):
        return f"Span(dim={self.dim}, ambient={self.ambient})"


def span_sum(*spans):
    out = spans[0]
    for s in spans[1:]:
        out = out + s
    return out


def span_intersection(*spans):
    out = spans[0]
    for s in spans[1:]:
        out = out.intersect(s)
    return out


def solve_left(rows, target, mode=RATIONAL):
    """Coefficients ``c`` with ``sum(c[i] * rows[i]) == target``, or ``None``.

    Rows and target are sparse vectors over non-negative integer columns.
    """
    shift = 1 + max([max(r, default=-1) for r in rows] + [max(target, default=-1)])
    one = mode.one()
    piv = {}
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[shift + i] = one
        kernel.insert_vector(aug, piv)
    res = kernel.reduce_vector(target, piv)
    if any(j < shift for j in res):
        return None
    zero = mode.zero()
    return [-res.get(shift + i, zero) for i in range(len(rows))]

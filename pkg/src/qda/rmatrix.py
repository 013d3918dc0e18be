"""R-matrices on ``E (x) E`` and their structural checks.

Storage convention: ``entries[lex(l, m)][lex(v, r)]`` holds ``R^{lm}_{vr}``
and the operator is ``R(e_l (x) e_m) = sum R^{lm}_{vr} e_v (x) e_r``.  With
row vectors this makes the relation ``e_l e_m - R(e_l e_m)`` exactly row
``lex(l, m)`` of ``1 - entries``.
"""

from __future__ import annotations

from dataclasses import dataclass

from qda.exactnum import (GAUSSIAN, RATIONAL, Matrix, ModeError, Span,
                          conj_vec, mpq, rank)

BUILTINS = ("flip", "identity", "neg_flip", "neg_identity", "diag_signs", "hecke_gl")


@dataclass(frozen=True)
class HeckeData:
    alpha: object
    beta: object

    @property
    def alpha_plus_beta_is_one(self):
        return self.alpha + self.beta == 1


@dataclass(frozen=True)
class PropertyReport:
    symmetric: bool | None
    involutive: bool
    hermitian: bool | None
    qybe: bool
    hecke: HeckeData | None
    invertible: bool
    spectrum_contains_one: bool
    star_invariant: bool | None
    qybe_witness: tuple | None


class RMatrix:
    """An ``n^2 x n^2`` exact matrix of coefficients ``R^{lm}_{vr}``."""

    def __init__(self, n, entries, mode=RATIONAL, name=None, params=None):
        if n < 1:
            raise ValueError("n must be positive")
        nn = n * n
        if len(entries) != nn or any(len(row) != nn for row in entries):
            raise ValueError(f"R must be {nn}x{nn} for n={n}")
        self.n = n
        self.mode = mode
        self.name = name
        self.params = dict(params or {})
        self.matrix = Matrix.from_dense(entries, mode)
        self._props = None

    @property
    def dense(self):
        return self.matrix.to_dense()

    def entry(self, lam, mu, nu, rho):
        n = self.n
        return self.matrix.rows[lam * n + mu].get(nu * n + rho, self.mode.zero())

    def pair(self, lam, mu):
        return lam * self.n + mu

    def image(self, lam, mu):
        """``R(e_lam (x) e_mu)`` as a sparse vector over pair ordinals."""
        return self.matrix.rows[lam * self.n + mu]

    def relation_vectors(self, sign=-1):
        """Rows of ``1 + sign * R``: ``sign=-1`` gives the relations of the
        algebra, ``sign=+1`` those of its sign-flipped partner."""
        one = self.mode.one()
        out = []
        for a, row in enumerate(self.matrix.rows):
            v = {b: x * sign for b, x in row.items()}
            t = v.get(a, 0) + one
            if t:
                v[a] = t
            else:
                v.pop(a, None)
            out.append(v)
        return out

    def relation_span(self, sign=-1):
        return Span.from_vectors(self.n ** 2, self.relation_vectors(sign), self.mode)

    def negated_transpose(self):
        t = self.matrix.transpose()
        dense = [[-x for x in row] for row in t.to_dense()]
        return RMatrix(self.n, dense, self.mode)

    def properties(self):
        if self._props is None:
            self._props = properties(self)
        return self._props

    def __repr__(self):
        tag = self.name or "custom"
        return f"RMatrix({tag}, n={self.n}, {self.mode.name})"


def check_symmetric(R):
    """``R^{lm}_{vr} == R^{vr}_{lm}`` (real mode)."""
    if R.mode.complex:
        raise ModeError("check_symmetric needs rational mode; use check_hermitian")
    return R.matrix.transpose().rows == R.matrix.rows


def check_involutive(R):
    return (R.matrix @ R.matrix) == Matrix.identity(R.n ** 2, R.mode)


def _swap(a, n):
    lam, mu = divmod(a, n)
    return mu * n + lam


def check_hermitian(R):
    """Both conjugate symmetries ``R^{lm}_{vr} = conj R^{vr}_{lm} = conj R^{ml}_{rv}``."""
    if not R.mode.complex:
        raise ModeError("check_hermitian needs gaussian-rational mode")
    n = R.n
    rows = R.matrix.rows
    zero = R.mode.zero()
    for a, row in enumerate(rows):
        for b in range(n * n):
            x = row.get(b, zero)
            if x != rows[b].get(a, zero).conjugate():
                return False
            if x != rows[_swap(a, n)].get(_swap(b, n), zero).conjugate():
                return False
    return True


def _kron_left(R):
    """``R (x) I`` on ``E^{(x)3}``, same row-vector convention."""
    n = R.n
    rows = []
    for a in range(n ** 2):
        img = R.matrix.rows[a]
        for k in range(n):
            rows.append({b * n + k: x for b, x in img.items()})
    return Matrix(rows, n ** 3, R.mode)


def _kron_right(R):
    n = R.n
    rows = []
    for i in range(n):
        for a in range(n ** 2):
            img = R.matrix.rows[a]
            rows.append({i * n * n + b: x for b, x in img.items()})
    return Matrix(rows, n ** 3, R.mode)


def qybe_witness(R):
    """First input triple ``(i, j, k)`` (0-based) where the two sides of the
    Yang-Baxter equation differ, or ``None``."""
    A = _kron_left(R)
    B = _kron_right(R)
    left = A @ B @ A
    right = B @ A @ B
    n = R.n
    for t, (u, v) in enumerate(zip(left.rows, right.rows)):
        if u != v:
            return (t // (n * n), (t // n) % n, t % n)
    return None


def check_qybe(R):
    return qybe_witness(R) is None


def check_hecke(R):
    """``(alpha, beta)`` with ``R^2 = alpha R + beta 1`` and ``beta != 0``, else ``None``.

    Scalar matrices ``c 1`` are reported as ``(0, c^2)``.
    """
    N = R.n ** 2
    E = R.matrix.rows
    E2 = (R.matrix @ R.matrix).rows
    zero = R.mode.zero()
    diag = [E[i].get(i, zero) for i in range(N)]
    off = next(((i, j) for i in range(N) for j in E[i] if j != i), None)
    if off is None and all(d == diag[0] for d in diag):
        alpha, beta = zero, diag[0] * diag[0]
    else:
        if off is not None:
            i, j = off
            alpha = E2[i].get(j, zero) / E[i][j]
        else:
            i = 0
            j = next(k for k in range(N) if diag[k] != diag[0])
            alpha = (E2[j].get(j, zero) - E2[i].get(i, zero)) / (diag[j] - diag[i])
        beta = E2[0].get(0, zero) - alpha * diag[0]
    one = R.mode.one()
    for i in range(N):
        expect = {j: alpha * x for j, x in E[i].items()}
        t = expect.get(i, zero) + beta * one
        if t:
            expect[i] = t
        else:
            expect.pop(i, None)
        expect = {j: x for j, x in expect.items() if x}
        if expect != E2[i]:
            return None
    if not beta:
        return None
    return HeckeData(alpha, beta)


def is_invertible(R):
    return rank(R.matrix) == R.n ** 2


def spectrum_contains_one(R):
    """1 is an eigenvalue of R, i.e. the relation span is a proper subspace."""
    return R.relation_span(-1).dim < R.n ** 2


def star_invariant(R):
    """Relation span is stable under ``u (x) v -> conj(v) (x) conj(u)``."""
    span = R.relation_span(-1)
    n = R.n
    for v in span.basis:
        starred = {_swap(k, n): x for k, x in conj_vec(v).items()}
        if not span.contains(starred):
            return False
    return True


def properties(R):
    witness = qybe_witness(R)
    return PropertyReport(
        symmetric=None if R.mode.complex else check_symmetric(R),
        involutive=check_involutive(R),
        hermitian=check_hermitian(R) if R.mode.complex else None,
        qybe=witness is None,
        hecke=check_hecke(R),
        invertible=is_invertible(R),
        spectrum_contains_one=spectrum_contains_one(R),
        star_invariant=star_invariant(R) if R.mode.complex else None,
        qybe_witness=witness,
    )


def satisfies_axioms(R):
    """Symmetric (hermitian in complex mode) and involutive."""
    p = R.properties()
    sym = p.hermitian if R.mode.complex else p.symmetric
    return bool(sym) and p.involutive


def default_signs(n):
    return [[1 if i == j else -1 for j in range(n)] for i in range(n)]


def builtin(name, n=2, signs=None, q=None, mode=RATIONAL):
    """Construct one of the shipped R-matrices.

    ``hecke_gl(n, q)`` is the standard GL(n) Hecke matrix divided by ``q``, so
    its eigenvalues are ``1`` and ``-1/q^2``.
    """
    if name not in BUILTINS:
        raise ValueError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTINS)}")
    if n < 1:
        raise ValueError("n must be positive")
    N = n * n
    E = [[0] * N for _ in range(N)]
    params = {"n": n}
    if name in ("flip", "neg_flip"):
        s = 1 if name == "flip" else -1
        for lam in range(n):
            for mu in range(n):
                E[lam * n + mu][mu * n + lam] = s
    elif name in ("identity", "neg_identity"):
        s = 1 if name == "identity" else -1
        for a in range(N):
            E[a][a] = s
    elif name == "diag_signs":
        signs = default_signs(n) if signs is None else signs
        if len(signs) != n or any(len(r) != n for r in signs):
            raise ValueError(f"signs must be an {n}x{n} table")
        if any(s not in (1, -1) for r in signs for s in r):
            raise ValueError("signs must be +1 or -1")
        for lam in range(n):
            for mu in range(n):
                E[lam * n + mu][lam * n + mu] = signs[lam][mu]
        params["signs"] = [list(r) for r in signs]
    elif name == "hecke_gl":
        q = mpq(2) if q is None else mpq(q)
        if not q:
            raise ValueError("q must be nonzero")
        inv = 1 / q
        for i in range(n):
            E[i * n + i][i * n + i] = mpq(1)
            for j in range(n):
                if i == j:
                    continue
                E[i * n + j][j * n + i] = inv
                if i > j:
                    E[i * n + j][i * n + j] = 1 - inv * inv
        params["q"] = q
    if mode is GAUSSIAN:
        E = [[mode.coerce(x) for x in row] for row in E]
    else:
        E = [[mpq(x) for x in row] for row in E]
    return RMatrix(n, E, mode, name=name, params=params)

from fractions import Fraction

import pytest

from qda.exactnum import GAUSSIAN, GaussQ, ModeError, mpq
from qda.rmatrix import (BUILTINS, RMatrix, builtin, check_hecke, check_hermitian,
                         check_involutive, check_qybe, check_symmetric, qybe_witness,
                         satisfies_axioms, star_invariant)

import refmath


def ref_qybe(R):
    E = refmath.to_frac(R.dense)
    I = refmath.identity(R.n)
    A, B = refmath.kron(E, I), refmath.kron(I, E)
    mm = refmath.matmul
    return mm(mm(A, B), A) == mm(mm(B, A), B)


def test_flip_matrix():
    R = builtin("flip", 2)
    assert R.dense == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    assert R.entry(0, 1, 1, 0) == 1
    assert builtin("neg_flip", 2).dense == [[-x for x in row] for row in R.dense]


@pytest.mark.parametrize("name", [b for b in BUILTINS if b != "hecke_gl"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_builtins_symmetric_involutive(name, n):
    R = builtin(name, n)
    assert check_symmetric(R)
    assert check_involutive(R)
    h = check_hecke(R)
    assert (h.alpha, h.beta) == (0, 1)


@pytest.mark.parametrize("name", ["flip", "identity", "neg_flip", "neg_identity", "hecke_gl"])
@pytest.mark.parametrize("n", [2, 3])
def test_qybe_against_dense_oracle(name, n):
    R = builtin(name, n)
    assert check_qybe(R) == ref_qybe(R) is True


def test_qybe_diag_signs_fails_with_witness():
    R = builtin("diag_signs", 2, signs=[[1, -1], [-1, 1]])
    assert not ref_qybe(R)
    assert not check_qybe(R)
    i, j, k = qybe_witness(R)
    # evaluate both sides on the witness basis tensor with the dense oracle
    E = refmath.to_frac(R.dense)
    I = refmath.identity(2)
    A, B = refmath.kron(E, I), refmath.kron(I, E)
    mm = refmath.matmul
    t = i * 4 + j * 2 + k
    assert mm(mm(A, B), A)[t] != mm(mm(B, A), B)[t]
    assert (i, j, k) == (0, 0, 1)  # e1 (x) e1 (x) e2


def test_hecke_gl_data():
    R = builtin("hecke_gl", 2, q=2)
    assert not check_involutive(R)
    h = check_hecke(R)
    assert (h.alpha, h.beta) == (mpq(3, 4), mpq(1, 4))
    assert h.alpha_plus_beta_is_one
    # independent check of R^2 = alpha R + beta 1 in Fractions
    E = refmath.to_frac(R.dense)
    E2 = refmath.matmul(E, E)
    a, b = Fraction(3, 4), Fraction(1, 4)
    assert all(E2[i][j] == a * E[i][j] + b * (i == j) for i in range(4) for j in range(4))
    # spectrum {1, -1/q^2}: R - 1 and R + 1/4 are both singular
    assert refmath.rank([[E[i][j] - (i == j) for j in range(4)] for i in range(4)]) < 4
    assert refmath.rank([[E[i][j] + b * (i == j) for j in range(4)] for i in range(4)]) < 4
    p = R.properties()
    assert p.spectrum_contains_one and p.invertible


def test_hecke_gl_is_symmetric():
    # the standard matrix has equal swap entries 1/q in both directions
    R = builtin("hecke_gl", 3, q=mpq(5, 2))
    E = refmath.to_frac(R.dense)
    assert check_symmetric(R) == (E == [list(c) for c in zip(*E)]) is True


def test_generic_r_not_hecke():
    E = [[mpq(x) for x in row] for row in
         [[1, 2, 0, 1], [0, 3, 1, 0], [1, 0, 0, 2], [0, 1, 1, 1]]]
    R = RMatrix(2, E)
    rows = [[Fraction(int(i == j)) for i in range(4) for j in range(4)],
            [x for row in refmath.to_frac(R.dense) for x in row],
            [x for row in refmath.matmul(refmath.to_frac(R.dense), refmath.to_frac(R.dense)) for x in row]]
    assert refmath.rank(rows) == 3
    assert check_hecke(R) is None
    assert not satisfies_axioms(R)


def test_builtin_errors():
    with pytest.raises(ValueError):
        builtin("nope", 2)
    with pytest.raises(ValueError):
        builtin("hecke_gl", 2, q=0)
    with pytest.raises(ValueError):
        builtin("diag_signs", 2, signs=[[1, 2], [1, 1]])
    with pytest.raises(ValueError):
        RMatrix(2, [[1, 0], [0, 1]])


def test_mode_errors():
    with pytest.raises(ModeError):
        check_hermitian(builtin("flip", 2))
    with pytest.raises(ModeError):
        check_symmetric(builtin("flip", 2, mode=GAUSSIAN))


def _twisted(u):
    z, one = GaussQ(), GaussQ(1)
    return RMatrix(2, [[one, z, z, z], [z, z, u, z], [z, u.conjugate(), z, z], [z, z, z, one]], GAUSSIAN)


def test_hermitian_examples():
    assert check_hermitian(builtin("flip", 2, mode=GAUSSIAN))
    i = GaussQ(0, 1)
    R = _twisted(i)
    assert check_hermitian(R) and check_involutive(R) and check_qybe(R)
    assert star_invariant(R)
    # R^{12}_{12} = i with nothing compensating
    z, one = GaussQ(), GaussQ(1)
    bad = RMatrix(2, [[one, z, z, z], [z, i, z, z], [z, z, one, z], [z, z, z, one]], GAUSSIAN)
    assert not check_hermitian(bad)


@pytest.mark.parametrize("u, expected", [
    ([[1, -1], [-1, 1]], True),
    ([[1, 1], [1, -1]], True),
    ([[GaussQ(0, 1), 1], [1, 1]], False),   # u11 not real
    ([[1, GaussQ(0, 1)], [GaussQ(0, -1), 1]], False),  # u12 != conj(u21) and not real
])
def test_hermitian_diagonal_phases(u, expected):
    E = [[GaussQ() for _ in range(4)] for _ in range(4)]
    for a in range(2):
        for b in range(2):
            E[a * 2 + b][a * 2 + b] = GAUSSIAN.coerce(u[a][b])
    assert check_hermitian(RMatrix(2, E, GAUSSIAN)) is expected

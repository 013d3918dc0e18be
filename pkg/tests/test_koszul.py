import pytest

from qda.exactnum import Span, mpq
from qda.koszul import (DEFECT, EXACT, SCALAR, Comparison, KoszulComplex,
                        check_b_squared, check_diagram, check_presentation, classify,
                        complementarity, dual_dims_agree, euler_sums, koszul_homology)
from qda.quadalg import InclusionError, algebra, algebra_prime
from qda.rmatrix import BUILTINS, builtin

ONE = mpq(1)


@pytest.fixture(scope="module")
def flip_K():
    return KoszulComplex(algebra(builtin("flip", 2)))


def test_boundary_degree_one(flip_K):
    # b(a (x) x^l) = a x^l, here on K_1 in weight 2
    alg = flip_K.alg
    src = flip_K.component(1, 2)
    tgt = {pair: i for i, pair in enumerate(flip_K.component(0, 2))}
    mat = flip_K.boundary(1, 2)
    for idx, (a, k) in enumerate(src):
        u = flip_K.dual_basis(1)[k]
        (head, _), = u.items()
        prod = alg.multiply({a: ONE}, 1, {head: ONE}, 1)
        assert mat[idx] == {tgt[(word, 0)]: c for word, c in prod.items()}


def test_boundary_degree_zero(flip_K):
    assert all(not row for row in flip_K.boundary(0, 2).values())


def test_boundary_flip_p2(flip_K):
    # b(1 (x) (e1 e2 - e2 e1)) = x1 (x) e2 - x2 (x) e1
    assert flip_K.component(2, 2) == [(0, 0)]
    tgt = flip_K.component(1, 2)
    row = flip_K.boundary(2, 2)[0]
    assert {tgt[i]: c for i, c in row.items()} == {(0, 1): 1, (1, 0): -1}


def test_boundary_weight_bookkeeping(flip_K):
    for w in range(5):
        for p in range(1, w + 1):
            n_tgt = flip_K.dim(p - 1, w)
            for row in flip_K.boundary(p, w).values():
                assert all(0 <= i < n_tgt for i in row)


@pytest.mark.parametrize("name", BUILTINS)
def test_b_squared_and_presentation(name):
    alg = algebra(builtin(name, 2))
    assert check_b_squared(alg, 5)
    assert all(check_presentation(alg, 5).values())


def test_koszul_flip_acyclic():
    alg = algebra(builtin("flip", 2))
    rep = koszul_homology(alg, 6)
    assert rep.acyclic() and rep.betti() == {}
    assert euler_sums(alg, 6) == {m: 0 for m in range(1, 7)}


def test_koszul_hecke_acyclic():
    alg = algebra(builtin("hecke_gl", 2))
    assert koszul_homology(alg, 4).acyclic()
    assert all(s == 0 for s in euler_sums(alg, 4).values())


def test_koszul_identity():
    alg = algebra(builtin("identity", 2))
    K = KoszulComplex(alg)
    assert all(K.dim(p, w) == 0 for w in range(5) for p in range(2, w + 1))
    assert koszul_homology(alg, 4, K).acyclic()


@pytest.mark.parametrize("name", BUILTINS)
def test_dual_dims(name):
    alg = algebra(builtin(name, 2))
    assert dual_dims_agree(alg, 5)


@pytest.mark.parametrize("name", ["flip", "identity", "neg_flip", "neg_identity", "diag_signs"])
def test_complementarity(name):
    R = builtin(name, 2)
    assert complementarity(algebra(R), algebra_prime(R), 5)


def test_boundary_detects_bad_dual_space():
    alg = algebra(builtin("flip", 2))
    K = KoszulComplex(alg)
    # plant a degree-3 "dual space" whose tails leave A^!*_2
    alg._dual_spaces[3] = Span.from_vectors(8, [{0: ONE}])
    with pytest.raises(InclusionError):
        K.boundary(3, 3)


def test_h_low_degrees():
    cmp_ = Comparison(builtin("flip", 2))
    # h_0: A_r -> A^{(r,0)} is the re-lettering, a bijection on complements
    for r in range(4):
        mat = cmp_.h(0, r)
        cols = {next(iter(row)) for row in mat.values()}
        assert all(len(row) == 1 for row in mat.values())
        assert len(cols) == len(mat) == cmp_.big.dim(r, 0)
    # h_1 identifies A (x) E with Omega^1
    for r in range(4):
        assert cmp_.surjectivity(1, r + 1)[r + 1] == (True, 0)
    h2 = cmp_.h(2, 0)
    assert len(h2) == 1 and h2[0]


def test_diagram_flip():
    rep = check_diagram(builtin("flip", 2), 5)
    assert rep.dual_used == "Aprime"
    assert rep.row(1).status == EXACT
    assert rep.row(2).status == SCALAR and rep.row(2).scalar == 2
    assert all(rep.row(p).status == EXACT for p in range(3, 6))
    assert rep.all_surjective() and rep.end_proportional()
    assert all(r.iso for r in rep.rows)
    assert all(f.ok for f in rep.freeness)


@pytest.mark.parametrize("name", ["neg_flip", "neg_identity", "diag_signs"])
def test_diagram_scalar_is_degree(name):
    rep = check_diagram(builtin(name, 2), 4)
    for row in rep.rows[1:]:
        assert row.status in (EXACT, SCALAR)
        if row.status == SCALAR:
            assert row.scalar == row.p


def test_diagram_hecke():
    rep = check_diagram(builtin("hecke_gl", 2), 4)
    assert rep.dual_used == "Adual"
    assert all(r.status != DEFECT for r in rep.rows)
    assert rep.all_surjective()


def test_classify_synthetic():
    b = {0: {0: ONE, 1: mpq(2)}, 1: {1: ONE}}
    assert classify([(b, b)]) == (EXACT, None, [])
    scaled = {i: {j: 3 * x for j, x in row.items()} for i, row in b.items()}
    assert classify([(b, scaled)]) == (SCALAR, 3, [])
    # different scalars in two weights degrade to a defect
    doubled = {i: {j: 2 * x for j, x in row.items()} for i, row in b.items()}
    status, c, ranks = classify([(b, scaled), (b, doubled)])
    assert status == DEFECT and c is None and ranks == [2, 2]
    skew = {0: {0: ONE, 1: mpq(2)}, 1: {0: ONE}}
    status, _, ranks = classify([(b, skew)])
    assert status == DEFECT and ranks == [1]

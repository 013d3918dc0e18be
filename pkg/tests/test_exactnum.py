from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qda.exactnum import (GAUSSIAN, RATIONAL, DimensionError, GaussQ, Matrix,
                          ModeError, Span, format_rational, kernel_basis, mpq,
                          parse_rational, rank, rref, solve_left, span_intersection,
                          span_sum)

import refmath


@pytest.mark.parametrize("token, value", [
    ("3/4", mpq(3, 4)), ("-2", mpq(-2)), (" 6 / 8 ", mpq(3, 4)), (5, mpq(5)), ("+1/3", mpq(1, 3)),
])
def test_parse_rational(token, value):
    assert parse_rational(token) == value


@pytest.mark.parametrize("token", ["0.5", "1e3", "1/0", "", "x", True, 0.5, None])
def test_parse_rational_rejects(token):
    with pytest.raises(ValueError):
        parse_rational(token)


def test_format_round_trip():
    for x in (mpq(0), mpq(-7, 3), mpq(12)):
        assert parse_rational(format_rational(x)) == x
    assert format_rational(mpq(4, 2)) == "2"


def test_gauss_arithmetic():
    i = GaussQ(0, 1)
    assert i * i == GaussQ(-1)
    assert (GaussQ(1, 1) / GaussQ(1, -1)) == i
    assert GaussQ(3, 4) * GaussQ(3, 4).conjugate() == 25
    assert 1 - i == GaussQ(1, -1)
    assert not GaussQ()
    with pytest.raises(ZeroDivisionError):
        i / GaussQ()


def test_mode_parse_and_dump():
    z = GAUSSIAN.parse({"re": "1/2", "im": "-3"})
    assert z == GaussQ(mpq(1, 2), -3)
    assert GAUSSIAN.dump(z) == {"re": "1/2", "im": "-3"}
    assert GAUSSIAN.text(z) == "1/2-3i"
    with pytest.raises(ModeError):
        RATIONAL.parse({"re": "1"})
    with pytest.raises(ModeError):
        RATIONAL.coerce(GaussQ(1))


def test_matrix_mode_mixing():
    with pytest.raises(ModeError):
        Matrix.from_dense([[mpq(1), GaussQ(1)]])
    m = Matrix.from_dense([[1, 0], [GaussQ(0, 1), 2]])
    assert m.mode is GAUSSIAN
    with pytest.raises(ModeError):
        Matrix.from_dense([[1, 2]], GAUSSIAN) @ Matrix.from_dense([[1], [2]], RATIONAL)


def test_rref_small():
    m = Matrix.from_dense([[2, 4, 2], [1, 2, 2], [0, 0, 3]])
    r, piv = rref(m)
    assert piv == [0, 2]
    assert r.to_dense() == [[1, 2, 0], [0, 0, 1]]


small_ints = st.integers(min_value=-3, max_value=3)


def matrices(max_rows=5, max_cols=6):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=1, max_size=max_rows))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_reference(data):
    m = Matrix.from_dense([[mpq(x) for x in row] for row in data])
    assert rank(m) == refmath.rank([[Fraction(x) for x in row] for row in data])
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent_and_kernel(data):
    m = Matrix.from_dense([[mpq(x) for x in row] for row in data])
    r, piv = rref(m)
    assert rref(r)[0] == r
    ker = kernel_basis(m)
    assert len(ker) == m.ncols - len(piv)
    for v in ker:
        for row in m.rows:
            assert sum(x * v.get(j, 0) for j, x in row.items()) == 0


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5), matrices(4, 5))
def test_span_dimension_formula(a, b):
    cols = min(len(a[0]), len(b[0]))
    U = Span.from_vectors(cols, [{j: mpq(x) for j, x in enumerate(r[:cols]) if x} for r in a])
    V = Span.from_vectors(cols, [{j: mpq(x) for j, x in enumerate(r[:cols]) if x} for r in b])
    S, I = span_sum(U, V), span_intersection(U, V)
    assert S.dim + I.dim == U.dim + V.dim
    assert U.contains_span(I) and V.contains_span(I)
    assert S.contains_span(U) and S.contains_span(V)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 6))
def test_annihilator_involution(data):
    cols = len(data[0])
    U = Span.from_vectors(cols, [{j: mpq(x) for j, x in enumerate(r) if x} for r in data])
    ann = U.annihilator()
    assert ann.dim == cols - U.dim
    assert ann.annihilator() == U


def test_span_checks_ambient():
    with pytest.raises(DimensionError):
        Span.full(3) + Span.full(4)
    with pytest.raises(ModeError):
        Span.full(2, RATIONAL).intersect(Span.full(2, GAUSSIAN))


def test_coordinates_and_solve():
    U = Span.from_vectors(3, [{0: mpq(1), 1: mpq(1)}, {2: mpq(2)}])
    v = {0: mpq(3), 1: mpq(3), 2: mpq(5)}
    assert U.coordinates(v) == [3, 5]
    with pytest.raises(ValueError):
        U.coordinates({1: mpq(1)})
    rows = [{0: mpq(1), 1: mpq(2)}, {1: mpq(1)}]
    c = solve_left(rows, {0: mpq(2), 1: mpq(7)})
    assert c == [2, 3]
    assert solve_left(rows, {2: mpq(1)}) is None


def test_gaussian_span():
    i = GaussQ(0, 1)
    U = Span.from_vectors(2, [{0: GaussQ(1), 1: i}], GAUSSIAN)
    assert U.contains({0: i, 1: GaussQ(-1)})
    assert not U.contains({0: GaussQ(1), 1: GaussQ(-1)})

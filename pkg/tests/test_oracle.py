"""The naive oracle itself, checked against closed forms."""

from math import comb

from qda.oracle import naive_bigraded_dims, naive_hilbert
from qda.rmatrix import builtin


def test_closed_forms():
    assert naive_hilbert(builtin("flip", 2), 4) == [1, 2, 3, 4, 5]
    assert naive_hilbert(builtin("flip", 2), 4, sign=+1) == [1, 2, 1, 0, 0]
    assert naive_hilbert(builtin("identity", 2), 4) == [1, 2, 4, 8, 16]
    assert naive_hilbert(builtin("neg_identity", 2), 3) == [1, 2, 0, 0]


def test_bigraded_closed_form():
    dims = naive_bigraded_dims(builtin("flip", 2), 4)
    assert dims == {(r, s): (r + 1) * comb(2, s) for r in range(5) for s in range(5) if r + s <= 4}

import random

import pytest

from qda import _kernel_py, kernel
from qda.exactnum import mpq

try:
    from qda import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

needs_ext = pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")


def _random_rows(seed, nrows=30, ncols=25, density=0.3):
    rnd = random.Random(seed)
    rows = []
    for _ in range(nrows):
        rows.append({j: mpq(rnd.randint(-4, 4), rnd.randint(1, 3))
                     for j in range(ncols) if rnd.random() < density})
    return [{j: x for j, x in r.items() if x} for r in rows]


def _echelon(mod, rows):
    piv = {}
    for r in rows:
        mod.insert_vector(r, piv)
    mod.back_substitute(piv)
    return piv


def test_backend_selected():
    assert kernel.BACKEND in ("cython", "python")


@needs_ext
@pytest.mark.parametrize("seed", range(8))
def test_backends_agree(seed):
    rows = _random_rows(seed)
    a, b = _echelon(_kernel_py, rows), _echelon(_kernel_c, rows)
    assert a == b
    assert _kernel_py.rank_of(rows) == _kernel_c.rank_of(rows)
    probe = _random_rows(seed + 100, nrows=1)[0]
    assert _kernel_py.reduce_full(probe, a) == _kernel_c.reduce_full(probe, b)
    assert _kernel_py.reduce_vector(probe, a) == _kernel_c.reduce_vector(probe, b)
    first = dict(enumerate(rows[:10]))
    second = dict(enumerate(rows[10:35]))
    assert _kernel_py.compose(first, second) == _kernel_c.compose(first, second)


@pytest.mark.parametrize("mod", [_kernel_py] + ([_kernel_c] if _kernel_c else []))
def test_rref_invariants(mod):
    rows = _random_rows(7)
    piv = _echelon(mod, rows)
    for c, row in piv.items():
        assert row[c] == 1
        assert min(row) == c
        for other in piv:
            if other != c:
                assert other not in row
    # every input row reduces to zero
    for r in rows:
        assert mod.reduce_full(r, piv) == {}
    assert mod.rank_of(rows) == len(piv)


@pytest.mark.parametrize("mod", [_kernel_py] + ([_kernel_c] if _kernel_c else []))
def test_insert_returns_pivot(mod):
    piv = {}
    assert mod.insert_vector({2: mpq(2), 3: mpq(1)}, piv) == 2
    assert mod.insert_vector({2: mpq(4), 3: mpq(2)}, piv) is None
    assert piv[2] == {2: 1, 3: mpq(1, 2)}
    assert mod.rank_of([]) == 0

"""Backend selection for the row-reduction kernel.

The compiled extension ``qda._kernel`` is used when it imports; otherwise the
pure-Python twin is used.  Set ``QDA_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("QDA_PURE_PYTHON"):
    from qda import _kernel_py as _impl
    BACKEND = "python"
else:
    try:
        from qda import _kernel as _impl
        BACKEND = "cython"
    except ImportError:
        from qda import _kernel_py as _impl
        BACKEND = "python"

reduce_vector = _impl.reduce_vector
reduce_full = _impl.reduce_full
insert_vector = _impl.insert_vector
back_substitute = _impl.back_substitute
rank_of = _impl.rank_of
compose = _impl.compose

__all__ = ["BACKEND", "reduce_vector", "reduce_full", "insert_vector",
           "back_substitute", "rank_of", "compose"]

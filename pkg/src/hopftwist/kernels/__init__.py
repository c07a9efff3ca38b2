"""Hot integer-polynomial kernels behind the cyclotomic arithmetic.

The compiled extension ``_ckernels`` is used when it was built; otherwise
(or when ``HOPFTWIST_PURE`` is set to a non-empty value other than ``0``)
the pure-Python module ``_pure`` is used.  Both expose the same three
functions and return identical results.
"""

import os

from . import _pure

BACKEND = "python"
_impl = _pure

if os.environ.get("HOPFTWIST_PURE", "") in ("", "0"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pure

poly_reduce = _impl.poly_reduce
poly_mulmod = _impl.poly_mulmod
matmul = _impl.matmul

__all__ = ["BACKEND", "poly_reduce", "poly_mulmod", "matmul"]

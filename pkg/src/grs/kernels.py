"""Kernel selection: the compiled extension when built, else pure Python.

Set ``GRS_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("GRS_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
poly_add = _impl.poly_add
poly_iadd = _impl.poly_iadd
poly_mul = _impl.poly_mul
mono_mul = _impl.mono_mul
elem_mul = _impl.elem_mul
tensor_mul = _impl.tensor_mul
clear_cache = _impl.clear_cache

__all__ = [
    "IMPLEMENTATION",
    "clear_cache",
    "elem_mul",
    "mono_mul",
    "poly_add",
    "poly_iadd",
    "poly_mul",
    "tensor_mul",
]

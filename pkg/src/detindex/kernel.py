"""Kernel selection: compiled _speedups when importable, else pure Python.

Set DETINDEX_PURE_KERNEL=1 to force the pure-Python kernels (used by the
benchmark to compare both lanes).
"""

import os

if os.environ.get("DETINDEX_PURE_KERNEL") == "1":
    from . import _pykernel as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

iadd_scaled = _impl.iadd_scaled
iadd_scaled_mod = _impl.iadd_scaled_mod
scale_values = _impl.scale_values
scale_values_mod = _impl.scale_values_mod
mul_terms = _impl.mul_terms
mul_terms_mod = _impl.mul_terms_mod
content = _impl.content
find_divisor = _impl.find_divisor

"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ODDGENUS_PURE=1 to force the pure-Python kernels (used by the benchmark
to compare both backends).
"""

import os

if os.environ.get("ODDGENUS_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
term_degree = _impl.term_degree

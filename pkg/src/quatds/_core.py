"""Select the compiled kernels when available, else the numpy fallback.

Set QUATDS_PURE_PYTHON=1 to force the fallback.
"""
from __future__ import annotations

import os

BACKEND = "python"
if os.environ.get("QUATDS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = None
else:
    _impl = None
if _impl is None:
    from . import _kernels_py as _impl

qmul_rows = _impl.qmul_rows
cauchy_kernel_rows = _impl.cauchy_kernel_rows
form3_on_frames = _impl.form3_on_frames
weighted_sandwich_sum = _impl.weighted_sandwich_sum
TRIPLES = _impl.TRIPLES

"""Kernel backend selection.

The compiled extension is used when it imports; setting ``CIRCSQF_PURE_PYTHON``
to a non-empty value forces the pure-Python kernels.
"""

import os

from . import _pykernels

try:
    if os.environ.get("CIRCSQF_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as kernels
    BACKEND = "cython"
except ImportError:
    kernels = _pykernels
    BACKEND = "python"

__all__ = ["kernels", "BACKEND", "_pykernels"]

"""Backend selection for the F_p kernels.

The compiled extension ``maxcomm._ckernels`` is used when it was built;
otherwise the pure-Python ``maxcomm._pykernels`` is used.  Setting the
environment variable ``MAXCOMM_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("MAXCOMM_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

rref_modp = _impl.rref_modp
matmul_modp = _impl.matmul_modp
closure_modp = _impl.closure_modp
commuting_pairs = _impl.commuting_pairs
enumerate_subrings = _impl.enumerate_subrings
centralizer_mask = _impl.centralizer_mask

__all__ = [
    "BACKEND",
    "rref_modp",
    "matmul_modp",
    "closure_modp",
    "commuting_pairs",
    "enumerate_subrings",
    "centralizer_mask",
]

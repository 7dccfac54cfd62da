"""Kernel dispatch: compiled extension when importable, else pure Python.

Set ``SYMLAT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
hafnian_int = _fallback.hafnian_int
bareiss_det = _fallback.bareiss_det

if not os.environ.get("SYMLAT_PURE_PYTHON"):
    try:
        from ._ext import _kernels
    except ImportError:
        pass
    else:
        hafnian_int = _kernels.hafnian_int
        bareiss_det = _kernels.bareiss_det
        BACKEND = "cython"

__all__ = ["BACKEND", "bareiss_det", "hafnian_int"]

"""Kernel selection: compiled extension if importable, pure Python otherwise.

Set ``GENUS0_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from genus0 import _purepy

BACKEND = "python"
mul_trunc = _purepy.mul_trunc
norm_search = _purepy.norm_search

if not os.environ.get("GENUS0_PURE_PYTHON"):
    try:
        from genus0 import _speedups
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        mul_trunc = _speedups.mul_trunc
        norm_search = _speedups.norm_search


def backends() -> dict:
    """All importable kernel implementations, keyed by name."""
    out = {"python": _purepy}
    try:
        from genus0 import _speedups
    except ImportError:
        return out
    out["cython"] = _speedups
    return out

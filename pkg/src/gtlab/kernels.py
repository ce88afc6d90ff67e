"""Kernel selection: compiled when available, pure Python otherwise.

Set ``GTLAB_PURE=1`` to force the Python implementations.
"""

from __future__ import annotations

import os

from . import _pykernels

INF = _pykernels.INF

_impl = _pykernels
if not os.environ.get("GTLAB_PURE"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "compiled" if _impl is not _pykernels else "python"

min_total_dominating = _impl.min_total_dominating
max_packing = _impl.max_packing
prufer_codes = _impl.prufer_codes


def dp_count(parent, order):
    """``(γ_t, count)`` of a rooted forest; exact even past 64-bit counts."""
    if _impl is _pykernels:
        return _pykernels.dp_count(parent, order)
    try:
        return _impl.dp_count(parent, order)
    except OverflowError:
        return _pykernels.dp_count(parent, order)

"""Kernel selection: compiled extension when built, pure Python otherwise.

Set QLAB_FORCE_PYTHON=1 to ignore the compiled kernel even if present.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback
from ._fallback import (
    INT64_MAX,
    INT64_MIN,
    STATUS_ALIVE,
    STATUS_DIED,
    STATUS_ENDED,
    STATUS_OVERFLOW,
)

if os.environ.get("QLAB_FORCE_PYTHON"):
    _kernel = None
else:
    try:
        from . import _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = None

BACKEND = "compiled" if _kernel is not None else "python"

__all__ = [
    "BACKEND",
    "INT64_MAX",
    "INT64_MIN",
    "STATUS_ALIVE",
    "STATUS_DIED",
    "STATUS_ENDED",
    "STATUS_OVERFLOW",
    "q_generate",
]


def q_generate(prefix, zero_extended: bool, max_terms: int, mode: str):
    """Dispatch to the kernel for ``mode``.

    Exact mode always runs the Python generator on unbounded integers;
    fast64 prefers the compiled kernel.  Returns ``(terms, status, at)``
    where ``terms`` is a list (Python path) or int64 array (compiled path).
    """
    if mode == "exact":
        return _fallback.q_generate(prefix, zero_extended, max_terms, checked=False)
    if _kernel is not None:
        arr = np.asarray(prefix, dtype=np.int64)
        return _kernel.q_generate(arr, zero_extended, max_terms)
    return _fallback.q_generate(prefix, zero_extended, max_terms, checked=True)

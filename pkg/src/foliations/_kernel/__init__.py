"""Kernel selection: compiled extension when available, pure Python otherwise.

Set FOLIATIONS_PURE_KERNEL=1 to force the fallback (used by the
benchmark suite and for debugging).  The active implementation is
reported in `ACTIVE` and re-exported function by function so the rest
of the package stays oblivious to the choice.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("FOLIATIONS_PURE_KERNEL"):
    _impl = pure
else:
    try:
        from . import fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

ACTIVE = _impl.NAME

merge_terms = _impl.merge_terms
scale_terms = _impl.scale_terms
term_mul = _impl.term_mul
mul_terms = _impl.mul_terms
normal_form = _impl.normal_form
reduce_int = _impl.reduce_int

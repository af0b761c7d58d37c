"""Kernel dispatch: compiled speedups when safe, pure Python otherwise.

The compiled kernels use int64 arithmetic, so they are only invoked
when a conservative bound proves no intermediate can overflow; inputs
with huge coordinates silently take the pure path, preserving exact
arbitrary-precision semantics.  LORENZEN_PURE=1 disables the compiled
path entirely (performance knob; verdicts and witnesses are identical
on both paths).
"""

from __future__ import annotations

import os
from typing import Optional

from . import _purekernels

if os.environ.get("LORENZEN_PURE"):
    _speedups = None
else:
    try:
        from . import _speedups  # type: ignore[attr-defined]
    except ImportError:
        _speedups = None

HAVE_SPEEDUPS = _speedups is not None

_INT64_SAFE = 1 << 60


def enum_feasible(cols, bound: int) -> Optional[list]:
    """First (lex-least) integer vector p, 0 <= p_k <= bound, p != 0,
    with sum p_k * cols[k] <= 0 componentwise; None if infeasible."""
    if _speedups is not None and cols:
        big = max((abs(x) for row in cols for x in row), default=0)
        # |partial sum| and |suffix minimum| are each <= m*bound*big
        if len(cols) * bound * big < _INT64_SAFE:
            return _speedups.enum_feasible(cols, bound)
    return _purekernels.enum_feasible(cols, bound)


def minimal_mask(points) -> list:
    """0/1 keep-mask of componentwise-minimal points (ties keep the
    earliest index)."""
    if _speedups is not None and points:
        big = max((abs(x) for row in points for x in row), default=0)
        if big < _INT64_SAFE:
            return _speedups.minimal_mask(points)
    return _purekernels.minimal_mask(points)

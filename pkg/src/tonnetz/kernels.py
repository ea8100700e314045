"""Backend selection for the Smith normal form kernel.

The compiled ``_snf_ext`` module is used when it imports; set
``TONNETZ_PURE_PYTHON=1`` to force the pure-Python path.
"""
from __future__ import annotations

import os
from typing import Sequence

from tonnetz import _snf

_ext = None
if os.environ.get("TONNETZ_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from tonnetz import _snf_ext as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of ``matrix`` (exact)."""
    if _ext is not None:
        try:
            return _ext.smith_diagonal(matrix)
        except OverflowError:
            pass
    return _snf.smith_diagonal(matrix)

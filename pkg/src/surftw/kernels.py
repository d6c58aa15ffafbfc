"""Kernel dispatch: compiled extension when built, Python otherwise.

Set ``SURFTW_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
implementation in use.
"""

from __future__ import annotations

import os

from . import _pykernels

_compiled = None
if os.environ.get("SURFTW_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def treewidth_dp(adj: list[int], n: int, upper: int) -> tuple[int, list[int]]:
    if _compiled is not None and n <= 30:
        return _compiled.treewidth_dp(adj, n, upper)
    return _pykernels.treewidth_dp(adj, n, upper)


def min_hitting_set(masks: list[int], n: int, budget: int) -> tuple[int, list[int]]:
    if _compiled is not None and n <= 64:
        return _compiled.min_hitting_set(masks, n, budget)
    return _pykernels.min_hitting_set(masks, n, budget)

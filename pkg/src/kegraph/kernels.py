"""Kernel backend selection.

The compiled extension is used when it imported cleanly; set
``KEGRAPH_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("KEGRAPH_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined,no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
maximum_independent_sets = _impl.maximum_independent_sets
independent_sets = _impl.independent_sets
critical_independent_sets = _impl.critical_independent_sets
max_difference_all_subsets = _impl.max_difference_all_subsets


def available_backends() -> dict[str, object]:
    out: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out

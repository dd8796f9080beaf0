"""Backend selection for the search kernels.

The compiled extension is used when it was built; otherwise, or when
``MATCHBOOK_PURE_PYTHON=1`` is set, the pure-Python twin takes over. Both
expose ``assign_pages`` and ``search_spine`` with identical semantics.
"""

from __future__ import annotations

import os

from . import _pykernel

FOUND = _pykernel.FOUND
EXHAUSTED = _pykernel.EXHAUSTED
OUT_OF_BUDGET = _pykernel.OUT_OF_BUDGET

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["compiled"] = _ckernel

if os.environ.get("MATCHBOOK_PURE_PYTHON", "") not in ("", "0") or _ckernel is None:
    BACKEND_NAME = "python"
else:
    BACKEND_NAME = "compiled"


def get_backend(name: str | None = None):
    """The kernel module for ``name`` (default: the one selected at import)."""
    name = name or BACKEND_NAME
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None

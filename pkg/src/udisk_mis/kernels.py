"""Kernel backend selection.

The compiled extension is used when it imports; ``UDISK_BACKEND=python``
forces the pure-Python fallback.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels


def _default() -> str:
    wanted = os.environ.get("UDISK_BACKEND", "").strip().lower()
    if wanted in BACKENDS:
        return wanted
    return "compiled" if "compiled" in BACKENDS else "python"


DEFAULT_BACKEND = _default()


def get(name: str | None = None) -> ModuleType:
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None

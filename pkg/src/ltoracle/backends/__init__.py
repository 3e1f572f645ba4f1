"""Kernel backend selection.

The compiled extension is preferred when built; the numpy kernels are the
always-available fallback with identical semantics. Set LTORACLE_BACKEND to
"cython" or "python" before import to force one (forcing "cython" without the
built extension is an error rather than a silent downgrade).
"""

from __future__ import annotations

import os
from types import ModuleType

from ltoracle.backends import py_kernels

try:
    from ltoracle.backends import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None  # type: ignore[assignment]

_forced = os.environ.get("LTORACLE_BACKEND")
if _forced == "python":
    active: ModuleType = py_kernels
elif _forced == "cython":
    if _kernels is None:
        raise ImportError(
            "LTORACLE_BACKEND=cython, but the compiled kernels are not built"
        )
    active = _kernels
elif _forced:
    raise ImportError(f"unknown LTORACLE_BACKEND value: {_forced!r}")
else:
    active = _kernels if _kernels is not None else py_kernels


def backend_name() -> str:
    return active.BACKEND_NAME


def available_backends() -> dict[str, ModuleType]:
    found = {py_kernels.BACKEND_NAME: py_kernels}
    if _kernels is not None:
        found[_kernels.BACKEND_NAME] = _kernels
    return found

"""Bitset kernel selection.

The native (Cython) kernel is used when its extension module was built;
otherwise the pure-Python kernel takes over. ``SEMLAT_KERNEL=pure`` or
``SEMLAT_KERNEL=native`` in the environment forces a backend, and callers
may request one explicitly (the benchmark compares both in one process).
"""

from __future__ import annotations

import os

from .pure import PureKernel

try:
    from ._native import NativeKernel
except ImportError:
    NativeKernel = None

HAVE_NATIVE = NativeKernel is not None


def available_backends() -> tuple[str, ...]:
    return ("pure", "native") if HAVE_NATIVE else ("pure",)


def default_backend() -> str:
    forced = os.environ.get("SEMLAT_KERNEL", "").strip().lower()
    if forced:
        if forced not in ("pure", "native"):
            raise ValueError(f"SEMLAT_KERNEL must be 'pure' or 'native', not {forced!r}")
        if forced == "native" and not HAVE_NATIVE:
            raise ValueError("SEMLAT_KERNEL=native but the native kernel is not built")
        return forced
    return "native" if HAVE_NATIVE else "pure"


def make_kernel(rows, n_objects: int, n_attributes: int, backend: str | None = None):
    """Build a kernel over row bitmasks (one int per object, one bit per attribute)."""
    name = backend or default_backend()
    if name == "pure":
        return PureKernel(rows, n_objects, n_attributes)
    if name == "native":
        if not HAVE_NATIVE:
            raise ValueError("native kernel requested but the extension is not built")
        return NativeKernel(rows, n_objects, n_attributes)
    raise ValueError(f"unknown kernel backend {name!r}")

"""Kernel backend selection.

The compiled extension ``planar2tree._kernels`` is used when it imports and
the graph fits in 64-bit masks; otherwise the pure-Python ``_pykernels``
module is used. Setting ``PLANAR2TREE_PURE=1`` forces the Python backend.
"""

from __future__ import annotations

import os

from . import _pykernels as python

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

MAX_COMPILED_ORDER = 64


def available() -> list[str]:
    return ["python"] + (["compiled"] if compiled is not None else [])


def select(name: str | None = None, n: int = 0):
    """Return the kernel module for ``name`` ("python", "compiled" or None
    for automatic)."""
    if name == "python":
        return python
    if name == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        if n > MAX_COMPILED_ORDER:
            raise ValueError(f"compiled kernels support order <= {MAX_COMPILED_ORDER}")
        return compiled
    if name is not None:
        raise ValueError(f"unknown backend {name!r}")
    if os.environ.get("PLANAR2TREE_PURE") == "1" or compiled is None or n > MAX_COMPILED_ORDER:
        return python
    return compiled

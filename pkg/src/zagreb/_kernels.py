"""Kernel backend selection.

The compiled extension (``zagreb._speedups``) is used when available;
setting ``ZAGREB_PURE_PYTHON=1`` forces the pure-Python fallback.  Both
backends expose ``free_tree_parents`` and ``prufer_canonical_codes`` with
identical semantics.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("ZAGREB_PURE_PYTHON"):
    backend = _kernels_py
else:
    try:
        from . import _speedups as backend  # type: ignore[no-redef]
    except ImportError:
        backend = _kernels_py

BACKEND: str = backend.BACKEND

free_tree_parents = backend.free_tree_parents
prufer_canonical_codes = backend.prufer_canonical_codes

"""Kernel dispatch.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` twin is used.  Setting ``M0NFLAG_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("M0NFLAG_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

compatibility_matrix = _impl.compatibility_matrix
clique_counts = _impl.clique_counts

__all__ = ["BACKEND", "compatibility_matrix", "clique_counts"]

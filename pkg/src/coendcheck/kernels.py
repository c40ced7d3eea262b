"""Backend selection for the exact-arithmetic inner loops.

The compiled extension is used when it was built; otherwise the pure-Python
twin is used.  Setting ``COENDCHECK_PURE=1`` forces the fallback.
"""

import os

from coendcheck import _pykernels

BACKEND = "python"
matmul = _pykernels.matmul
kron = _pykernels.kron
rref = _pykernels.rref

if not os.environ.get("COENDCHECK_PURE"):
    try:
        from coendcheck import _ckernels
    except ImportError:
        _ckernels = None
    else:
        BACKEND = "cython"
        matmul = _ckernels.matmul
        kron = _ckernels.kron
        rref = _ckernels.rref
else:
    _ckernels = None

__all__ = ["BACKEND", "matmul", "kron", "rref"]

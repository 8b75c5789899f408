"""Eigensolver kernels with backend selection.

The compiled extension (`numrad.kernels._native`) is used when available;
otherwise the pure-Python twin (`numrad.kernels._pure`) takes over with
identical semantics. Set NUMRAD_PURE=1 before import to force the fallback
(useful for debugging and for the backend benchmark).

Exposed kernels:
  eigh(H)              -> (eigenvalues ascending, eigenvector columns)
  eigvalsh(H)          -> eigenvalues ascending
  extremes_batch(S)    -> (mins, maxs) over a stack of Hermitian matrices
"""

import os

if os.environ.get("NUMRAD_PURE") == "1":
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _native as _impl

        BACKEND = "native"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

eigh = _impl.eigh
eigvalsh = _impl.eigvalsh
extremes_batch = _impl.extremes_batch


def backend() -> str:
    """Name of the kernel backend in use: 'native' or 'pure'."""
    return BACKEND

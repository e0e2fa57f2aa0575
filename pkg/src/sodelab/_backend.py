"""Kernel backend selection.

``SODELAB_BACKEND=numpy`` forces the pure-numpy kernels,
``SODELAB_BACKEND=numba`` requires the jitted ones (import error if numba
is missing), and unset/``auto`` prefers numba with a numpy fallback.
The choice is made once, at import time.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_ENV_VAR = "SODELAB_BACKEND"


def _select():
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numpy", "numba"):
        raise ValueError(
            f"{_ENV_VAR} must be 'numpy', 'numba' or 'auto', got {choice!r}"
        )
    if choice == "numpy":
        return _kernels_numpy, "numpy"
    try:
        from . import _kernels_numba
    except ImportError:
        if choice == "numba":
            raise
        return _kernels_numpy, "numpy"
    return _kernels_numba, "numba"


kernels, BACKEND = _select()


def active_backend() -> str:
    """Name of the kernel set in use: 'numpy' or 'numba'."""
    return BACKEND

"""Optional numba acceleration.

Set ``ORBICASIMIR_NUMBA=0`` to force the pure-numpy kernels (also used
automatically when numba is not importable).
"""
from __future__ import annotations

import os

ENV_FLAG = "ORBICASIMIR_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get(ENV_FLAG, "1").strip().lower() not in ("0", "false", "no", "off")


def njit(func):
    """Compile with numba when available; otherwise return the Python function unchanged."""
    if NUMBA_AVAILABLE:
        return numba.njit(cache=True)(func)
    return func

"""numba switch.

Set ``SCHURWEYL_DISABLE_NUMBA=1`` to run every kernel as plain Python on
numpy arrays.  The undecorated function stays reachable as ``kernel.py_func``
either way, so both paths can be compared in one process.
"""
import os
from warnings import warn

DISABLED = os.environ.get("SCHURWEYL_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    if not DISABLED:
        warn("numba not importable; kernels fall back to pure Python")

ENABLED = numba is not None and not DISABLED


def njit(func):
    if ENABLED:
        return numba.njit(cache=True, nogil=True)(func)
    func.py_func = func
    return func

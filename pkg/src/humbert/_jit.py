"""Optional numba acceleration for the scalar series kernels.

Kernels are written in the numba-compatible subset of Python. With numba
installed they are compiled with ``@njit``; setting ``HUMBERT_DISABLE_NUMBA=1``
(or running without numba) executes the same source as plain Python.
"""
import os

_disabled = os.environ.get("HUMBERT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    import numba as _numba
except ImportError:
    _numba = None

NUMBA_ENABLED = _numba is not None


def jit(fn):
    if _numba is None:
        return fn
    return _numba.njit(cache=True)(fn)

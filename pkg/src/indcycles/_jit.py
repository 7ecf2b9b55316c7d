"""Optional numba acceleration.

Kernels are written once in the numba-compatible subset of Python and
decorated with :func:`kernel`. Setting ``INDCYCLES_DISABLE_NUMBA=1`` before
import (or running without numba installed) leaves them as plain Python
functions operating on numpy arrays.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("INDCYCLES_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

try:
    if _DISABLED:
        raise ImportError
    import numba

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    NUMBA_ENABLED = False


def kernel(fn):
    """JIT-compile ``fn`` in nopython mode when numba is active.

    The undecorated function stays reachable as ``fn.py_func`` in both
    modes, so tests and benchmarks can compare the two paths.
    """
    if NUMBA_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn

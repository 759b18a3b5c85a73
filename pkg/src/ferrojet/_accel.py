"""Backend selection for the hot numerical kernels.

By default the scalar kernels in ``_kernels`` are JIT-compiled with numba.
Setting the environment variable ``FERROJET_PURE_NUMPY=1`` (or running on a
machine without numba) selects the pure-numpy/Python fallback path instead.
Both paths produce identical results; ``benchmarks/bench_kernels.py``
compares their speed.
"""

import os

_flag = os.environ.get("FERROJET_PURE_NUMPY", "").strip().lower()
PURE_NUMPY_REQUESTED = _flag in {"1", "true", "yes", "on"}

try:
    from numba import njit  # noqa: F401
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        """Decorator stub used when numba is absent."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap

USE_NUMBA = HAVE_NUMBA and not PURE_NUMPY_REQUESTED


def jit_if_enabled(func):
    """Compile ``func`` with numba when the numba backend is active."""
    if USE_NUMBA:
        return njit(cache=True)(func)
    return func

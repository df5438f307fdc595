"""Kernel backend selection.

The hot loops (pencil norms, ternary refinement, polar sweeps) exist twice:
a numba @njit build and a vectorised pure-numpy build.  The env flag

    BJG_BACKEND=numba   (default when numba imports)
    BJG_BACKEND=numpy   (force the fallback)

picks one at first use.  benchmarks/bench_kernels.py compares the two.
"""

import os

from .errors import ConfigurationError

_BACKEND = None
_BACKEND_NAME = None


def _select():
    choice = os.environ.get("BJG_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ConfigurationError(
            f"BJG_BACKEND must be 'numba' or 'numpy', got {choice!r}"
        )
    if choice != "numpy":
        try:
            from . import _kernels_numba

            return _kernels_numba, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy

    return _kernels_numpy, "numpy"


def kernels():
    """The active kernel module (lazy, cached)."""
    global _BACKEND, _BACKEND_NAME
    if _BACKEND is None:
        _BACKEND, _BACKEND_NAME = _select()
    return _BACKEND


def backend_name():
    kernels()
    return _BACKEND_NAME

"""Backend selection for the hot kernels.

The compiled extension is used when importable; set ``PEULER_PURE=1`` to force
the pure-Python fallback. Both expose the same functions.
"""
import os

from . import _kernels_py

if os.environ.get("PEULER_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

STAT_W1 = _kernels_py.STAT_W1
STAT_DB = _kernels_py.STAT_DB
STAT_N = _kernels_py.STAT_N
STAT_DES = _kernels_py.STAT_DES
STAT_PEAKS = _kernels_py.STAT_PEAKS
STAT_AB = _kernels_py.STAT_AB

linear_extensions = _impl.linear_extensions
count_extensions = _impl.count_extensions
extension_census = _impl.extension_census
bullet_words = _impl.bullet_words


def backends():
    """Return ``{name: module}`` for every importable backend."""
    found = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found

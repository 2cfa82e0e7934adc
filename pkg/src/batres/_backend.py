"""Select the special-function kernel backend at import time.

The compiled Cython module is used when it imports; otherwise the
pure-Python reference kernels are used.  Setting ``BATRES_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("BATRES_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels
    except ImportError:  # extension not built
        kernels = _kernels_py

BACKEND = kernels.BACKEND


def get_kernels(name=None):
    """Return the kernel module called ``name`` ("cython" or "python").

    ``None`` returns the active backend.  Asking for "cython" when the
    extension is not built raises ImportError.
    """
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")

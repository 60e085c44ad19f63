"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``IGROWTH_PURE_PYTHON=1`` to force the fallback. ``BACKEND`` names the
active implementation.
"""

import os

from . import _pykernels

if os.environ.get("IGROWTH_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "compiled"

closure = _impl.closure
low_index = _impl.low_index

"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``NN_EXTREMAL_PURE=1`` to force the
fallback. Both produce identical floats.
"""

import os
from array import array

from . import _pykernels

if os.environ.get("NN_EXTREMAL_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"


def as_buffer(values):
    """Contiguous float64 buffer accepted by either backend."""
    return array("d", values)


def get_backend(name=None):
    """Kernel module by name (``"compiled"`` / ``"python"``), default the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


sigma_xy = _impl.sigma_xy
nearest_xy = _impl.nearest_xy
pattern_search = _impl.pattern_search
grid_max = _impl.grid_max

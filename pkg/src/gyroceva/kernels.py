"""Backend selection for the 2-D hot kernels.

The compiled extension ``gyroceva._core`` is used when it was built;
otherwise the pure-Python twin ``gyroceva._core_py`` is loaded. Setting
``GYROCEVA_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("GYROCEVA_PURE_PYTHON", "") not in ("", "0"):
    from . import _core_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "cython"
    except ImportError:
        from . import _core_py as _impl
        BACKEND = "python"

gamma2 = _impl.gamma2
add2 = _impl.add2
gyrodist2 = _impl.gyrodist2
gw2 = _impl.gw2

__all__ = ["BACKEND", "gamma2", "add2", "gyrodist2", "gw2"]

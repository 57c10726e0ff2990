"""Backend selection for the element-arithmetic kernels.

The compiled ``_ckernels`` extension is used when it is importable; otherwise
the pure-Python ``_pykernels`` module is used.  Setting the environment
variable ``STABLEPIECES_PURE=1`` forces the pure-Python backend.
"""

import os

if os.environ.get("STABLEPIECES_PURE"):
    from ._pykernels import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._ckernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        BACKEND = "python"

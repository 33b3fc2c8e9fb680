"""Select the compiled kernels when available, else the numpy fallback.

Set ``SPHERICA_PUREPY=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("SPHERICA_PUREPY", "") not in ("", "0"):
    from ._kernels_py import eliminate, rank_mod_p
    BACKEND = "python"
else:
    try:
        from ._kernels import eliminate, rank_mod_p
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import eliminate, rank_mod_p
        BACKEND = "python"

__all__ = ["BACKEND", "eliminate", "rank_mod_p"]

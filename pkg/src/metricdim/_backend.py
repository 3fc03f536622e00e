"""Pick the compiled kernels when built, else the numpy fallback.

Set ``METRICDIM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

NAME = "python"
first_hit_distinct = _fallback.first_hit_distinct
first_hit_cover = _fallback.first_hit_cover

if os.environ.get("METRICDIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        NAME = "cython"
        first_hit_distinct = _kernels.first_hit_distinct
        first_hit_cover = _kernels.first_hit_cover

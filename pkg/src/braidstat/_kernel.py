"""Census kernel selection: compiled extension when available, pure Python
otherwise.  Set BRAIDSTAT_PURE=1 to force the fallback (used by the
benchmark)."""

from __future__ import annotations

import os

if os.environ.get("BRAIDSTAT_PURE"):
    from . import _census_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _census_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _census_py as _impl

        BACKEND = "pure"

count_range = _impl.count_range

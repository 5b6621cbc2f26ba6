"""Hot-kernel selection: compiled extension if present, else pure Python.

Set KNOTCOL_PURE=1 to force the fallback (useful for benchmarking and for
checking that both backends agree).
"""

import os

if os.environ.get("KNOTCOL_PURE") == "1":
    from knotcol._kernels._fallback import canonical_affine_min, det_bareiss_small
    BACKEND = "python"
else:
    try:
        from knotcol._kernels._speedups import canonical_affine_min, det_bareiss_small
        BACKEND = "compiled"
    except ImportError:
        from knotcol._kernels._fallback import canonical_affine_min, det_bareiss_small
        BACKEND = "python"

__all__ = ["canonical_affine_min", "det_bareiss_small", "BACKEND"]

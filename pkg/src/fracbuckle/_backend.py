"""Select the polynomial kernel backend at import time.

The compiled extension is used when it was built; setting the environment
variable ``FRACBUCKLE_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

if os.environ.get("FRACBUCKLE_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels

        BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["BACKEND", "kernels"]

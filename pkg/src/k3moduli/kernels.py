"""Kernel dispatch: the compiled extension when it was built, else pure Python.

``BACKEND`` names the implementation in use ("cython" or "python"). Setting
``K3MODULI_PURE_PYTHON=1`` forces the fallback even when the extension exists.
"""

import os

try:
    if os.environ.get("K3MODULI_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from ._kernels import (  # type: ignore[import-not-found]
        has_primitive_solution,
        oracle_hits,
        realization_pairs,
        unit_square_roots,
    )

    BACKEND = "cython"
except ImportError:  # pragma: no cover - exercised when the extension is absent
    from ._kernels_py import (
        has_primitive_solution,
        oracle_hits,
        realization_pairs,
        unit_square_roots,
    )

    BACKEND = "python"

__all__ = [
    "BACKEND",
    "has_primitive_solution",
    "oracle_hits",
    "realization_pairs",
    "unit_square_roots",
]

"""Hot kernels: compiled extension when available, pure Python otherwise.

Set ``CYCLOCOVER_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names
the implementation in use.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("CYCLOCOVER_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend or python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

lfsr_nonzero_mask = _impl.lfsr_nonzero_mask
coset_scan = _impl.coset_scan
first_uncovered = _impl.first_uncovered
first_covering_hyperplane = _impl.first_covering_hyperplane

__all__ = [
    "BACKEND",
    "compiled_backend",
    "python_backend",
    "lfsr_nonzero_mask",
    "coset_scan",
    "first_uncovered",
    "first_covering_hyperplane",
]

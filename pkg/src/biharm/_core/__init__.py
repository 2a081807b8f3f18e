"""Backend selection for the compute core.

Prefers the compiled extension when it imported cleanly; falls back to
the pure numpy implementation.  Set BIHARM_PURE_PYTHON=1 to force the
fallback (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("BIHARM_PURE_PYTHON", "0") not in ("", "0"):
    from . import numpy_backend as _impl

    have_speedups = False
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        have_speedups = True
    except ImportError:
        from . import numpy_backend as _impl

        have_speedups = False

BACKEND = _impl.BACKEND
horner = _impl.horner
gamma_pairs = _impl.gamma_pairs
poisson_matvec = _impl.poisson_matvec
dirichlet_matvec = _impl.dirichlet_matvec
criterion_min_scan = _impl.criterion_min_scan
near_pairs = _impl.near_pairs

__all__ = [
    "BACKEND",
    "have_speedups",
    "horner",
    "gamma_pairs",
    "poisson_matvec",
    "dirichlet_matvec",
    "criterion_min_scan",
    "near_pairs",
]

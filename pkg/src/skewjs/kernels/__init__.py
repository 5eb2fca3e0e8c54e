"""Backend selection for the numeric kernels.

Two interchangeable implementations exist: a numba-compiled one and a pure
numpy one.  The numba backend is preferred when importable; setting the
environment variable ``SKEWJS_NO_NUMBA`` to ``1``/``true``/``yes``/``on``
before import forces the numpy backend.  ``BACKEND`` records which one is
active.
"""

from __future__ import annotations

import os

__all__ = [
    "BACKEND",
    "comp_sum",
    "cross_entropy_sum",
    "dot_sum",
    "kl_plus_sum",
    "kl_sum",
    "separable_jeffreys",
    "separable_plain_js",
    "xlogx_sum",
]


def _numpy_forced() -> bool:
    flag = os.environ.get("SKEWJS_NO_NUMBA", "").strip().lower()
    return flag in {"1", "true", "yes", "on"}


if _numpy_forced():
    from . import _numpy as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except Exception:  # pragma: no cover - exercised only without numba
        from . import _numpy as _impl

        BACKEND = "numpy"

comp_sum = _impl.comp_sum
cross_entropy_sum = _impl.cross_entropy_sum
dot_sum = _impl.dot_sum
kl_plus_sum = _impl.kl_plus_sum
kl_sum = _impl.kl_sum
separable_jeffreys = _impl.separable_jeffreys
separable_plain_js = _impl.separable_plain_js
xlogx_sum = _impl.xlogx_sum

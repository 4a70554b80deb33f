"""Backend selection for the hot numeric kernels.

The compiled extension ``coorbital._kernels`` is used when importable;
otherwise the pure Python twin ``coorbital._kernels_py`` takes over.
Set ``COORBITAL_PURE=1`` to force the pure implementation. The two
backends are bit-identical by construction, so the choice only affects
speed.
"""

import os

if os.environ.get("COORBITAL_PURE", "").strip() not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

# Raw, unchecked evaluators. The public API in kernel.py and curve.py adds
# domain validation; inner loops call these directly.
f_eval = _impl.f_eval
f_prime = _impl.f_prime
f_double_prime = _impl.f_double_prime
curve_eval = _impl.curve_eval
curve_scan = _impl.curve_scan

"""Backend selection for the hot stencil kernels.

The compiled extension is used when it imported cleanly; setting the
environment variable ``CORRDIFF_PURE_PYTHON=1`` forces the numpy fallback.
Both backends implement identical update formulas in the same per-point
operation order.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py as _py

_compiled = None
if not os.environ.get("CORRDIFF_PURE_PYTHON"):
    try:
        from . import _kernels_c as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def _select(name):
    return getattr(_compiled, name) if _compiled is not None else getattr(_py, name)


nonlinear2d_step = _select("nonlinear2d_step")
nonlinear2d_classical_step = _select("nonlinear2d_classical_step")
linear3d_step = _select("linear3d_step")
linear3d_full_step = _select("linear3d_full_step")
max_abs = _select("max_abs")
max_abs_diff = _select("max_abs_diff")
max_abs_scaled_diff = _select("max_abs_scaled_diff")

if _compiled is not None:
    def linear2d_step(out, u, k2x, k2y, k1x, k1y, kxy, kxxyy, kxxy, kyyx, src,
                      src_scale=1.0):
        if isinstance(k2x, np.ndarray):
            return _compiled.linear2d_var_step(
                out, u, k2x, k2y, k1x, k1y, kxy, kxxyy, kxxy, kyyx, src, src_scale)
        return _compiled.linear2d_const_step(
            out, u, k2x, k2y, k1x, k1y, kxy, kxxyy, kxxy, kyyx, src, src_scale)
else:
    linear2d_step = _py.linear2d_step


def backend_pair():
    """(python module, compiled module or None) for benchmarks and parity tests."""
    return _py, _compiled

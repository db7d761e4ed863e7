"""Per-level vectorized evaluation of sources, boundary data and exact fields.

Functions built by ``exp_affine`` factor into a precomputed spatial array
times a per-level scalar; sources are therefore handed to the kernels as an
(array, scale) pair so no per-level array pass is spent on them at all, and
error tracking against such an exact field fuses into a single sweep.
Anything else is evaluated through its callables each level.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .functions import SpaceTimeFunc


def _exp_base(coef, X, Y, Z, extra_scale=1.0):
    c0, kx, ky, kz, kt = coef
    expo = kx * X + ky * Y
    if Z is not None:
        expo = expo + kz * Z
    return (extra_scale * c0) * np.exp(expo), kt


def make_spacetime_eval(func, X, Y, Z=None, scale: float = 1.0):
    """t -> scale * func(X, Y[, Z], t) as a float64 array."""
    coef = getattr(func, "exp_affine_coef", None)
    if coef is not None:
        base, kt = _exp_base(coef, X, Y, Z, scale)
        buf = np.empty_like(base)

        def ev(t):
            np.multiply(base, math.exp(kt * t), out=buf)
            return buf

        return ev

    if Z is None:
        def ev(t):
            out = np.asarray(func.value(X, Y, t), dtype=float)
            return out * scale if scale != 1.0 else out
    else:
        def ev(t):
            out = np.asarray(func.value(X, Y, Z, t), dtype=float)
            return out * scale if scale != 1.0 else out

    return ev


def make_source_pair_eval(func, X, Y, Z=None, scale: float = 1.0):
    """t -> (array, level scale) for the kernels' fused source argument."""
    coef = getattr(func, "exp_affine_coef", None)
    if coef is not None:
        base, kt = _exp_base(coef, X, Y, Z, scale)
        base = np.ascontiguousarray(base)
        return lambda t: (base, math.exp(kt * t))
    ev = make_spacetime_eval(func, X, Y, Z, scale=scale)
    return lambda t: (np.ascontiguousarray(ev(t)), 1.0)


def make_corrected_source_eval(src, tau, diff_terms, conv_x=None, conv_y=None,
                               X=None, Y=None, Z=None, conv_z=None,
                               scale: float = 1.0):
    """Pair evaluator for f + (tau/2)(diffusion/convection/time correction).

    diff_terms: list of (coefficient, partial name) pairs summed with weight
    tau/2, e.g. [(a, 'dxx'), (b, 'dyy'), (1.0, 'dt')].
    conv_x/conv_y/conv_z: None, or a scalar/array multiplying the dx/dy/dz
    partials (also weighted tau/2).  The result is scaled by ``scale``.
    """
    coef = getattr(src, "exp_affine_coef", None)
    half = 0.5 * tau
    if coef is not None:
        c0, kx, ky, kz, kt = coef
        k_of = {"dxx": kx * kx, "dyy": ky * ky, "dzz": kz * kz,
                "dx": kx, "dy": ky, "dz": kz, "dt": kt}
        factor = 1.0 + half * sum(w * k_of[nm] for w, nm in diff_terms)
        base, _ = _exp_base(coef, X, Y, Z)
        spatial = base * factor
        for conv, kdir in ((conv_x, kx), (conv_y, ky), (conv_z, kz)):
            if conv is not None:
                spatial = spatial + (half * kdir) * (conv * base)
        spatial = np.ascontiguousarray(spatial * scale)
        return lambda t: (spatial, math.exp(kt * t))

    parts = [(half * w, getattr(src, nm)) for w, nm in diff_terms]
    convs = [(conv, getattr(src, nm)) for conv, nm in
             ((conv_x, "dx"), (conv_y, "dy"), (conv_z, "dz")) if conv is not None]

    if Z is None:
        def ev(t):
            out = np.asarray(src.value(X, Y, t), dtype=float).copy()
            for w, fn in parts:
                out += w * fn(X, Y, t)
            for conv, fn in convs:
                out += half * (conv * fn(X, Y, t))
            out *= scale
            return (out, 1.0)
    else:
        def ev(t):
            out = np.asarray(src.value(X, Y, Z, t), dtype=float).copy()
            for w, fn in parts:
                out += w * fn(X, Y, Z, t)
            for conv, fn in convs:
                out += half * (conv * fn(X, Y, Z, t))
            out *= scale
            return (out, 1.0)

    return ev


def make_err_tracker(exact, X, Y, Z=None):
    """(field, t) -> max |field - exact(t)|, fused for exp-affine exacts."""
    coef = getattr(exact, "exp_affine_coef", None)
    if coef is not None:
        base, kt = _exp_base(coef, X, Y, Z)
        base = np.ascontiguousarray(base)
        return lambda u, t: kernels.max_abs_scaled_diff(u, base, math.exp(kt * t))
    ev = make_spacetime_eval(exact, X, Y, Z)
    return lambda u, t: kernels.max_abs_diff(u, np.ascontiguousarray(ev(t)))


def _edge_eval(alpha, xe, ye):
    if isinstance(alpha, SpaceTimeFunc) or hasattr(alpha, "exp_affine_coef"):
        return make_spacetime_eval(alpha, xe, ye)
    return lambda t: alpha(xe, ye, t)


class DirichletEdges2:
    """Writes the boundary data onto the ring of a 2D field.

    alpha may be a plain callable (x, y, t), a SpaceTimeFunc, or None for
    homogeneous data.
    """

    def __init__(self, grid, alpha):
        self.homogeneous = alpha is None
        if self.homogeneous:
            return
        xs, ys = grid.xs, grid.ys
        edges = [
            ((0, slice(None)), xs, np.full_like(xs, grid.L2)),
            ((-1, slice(None)), xs, np.full_like(xs, grid.R2)),
            ((slice(None), 0), np.full_like(ys, grid.L1), ys),
            ((slice(None), -1), np.full_like(ys, grid.R1), ys),
        ]
        self.evals = [(sel, _edge_eval(alpha, xe, ye)) for sel, xe, ye in edges]

    def fill(self, out, t):
        if self.homogeneous:
            out[0, :] = 0.0
            out[-1, :] = 0.0
            out[:, 0] = 0.0
            out[:, -1] = 0.0
            return
        for sel, ev in self.evals:
            out[sel] = ev(t)


class DirichletFaces3:
    """Writes the boundary data onto the shell of a 3D field."""

    def __init__(self, grid, alpha):
        self.homogeneous = alpha is None
        X, Y, Z = grid.mesh
        self.faces = []
        for axis, side in ((0, 0), (0, -1), (1, 0), (1, -1), (2, 0), (2, -1)):
            sel = [slice(None)] * 3
            sel[axis] = side
            sel = tuple(sel)
            if self.homogeneous:
                self.faces.append((sel, None))
                continue
            xf, yf, zf = X[sel], Y[sel], Z[sel]
            if isinstance(alpha, SpaceTimeFunc) or hasattr(alpha, "exp_affine_coef"):
                ev = make_spacetime_eval(alpha, xf, yf, zf)
            else:
                ev = (lambda t, xf=xf, yf=yf, zf=zf: alpha(xf, yf, zf, t))
            self.faces.append((sel, ev))

    def fill(self, out, t):
        for sel, ev in self.faces:
            out[sel] = 0.0 if ev is None else ev(t)

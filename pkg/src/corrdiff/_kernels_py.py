"""Vectorized numpy time-step kernels (fallback backend).

Every kernel writes the interior of ``out`` from level-k values in ``u``
(never reading ``out``), leaves the boundary ring of ``out`` untouched, and
returns the max absolute value written.  The scalar/array coefficients are
pre-folded with tau and the grid divisors by the scheme drivers, so a kernel
is pure stencil arithmetic:

    out = u + k2x*(raw d2x) + k2y*(raw d2y) + k1x*(raw dcx) + ...

The compiled backend in ``_kernels_c.pyx`` implements the same operations in
the same per-point order; ``corrdiff.kernels`` picks one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _shifts2(u):
    c = u[1:-1, 1:-1]
    e = u[1:-1, 2:]
    w = u[1:-1, :-2]
    n = u[2:, 1:-1]
    s = u[:-2, 1:-1]
    ne = u[2:, 2:]
    nw = u[2:, :-2]
    se = u[:-2, 2:]
    sw = u[:-2, :-2]
    return c, e, w, n, s, ne, nw, se, sw


def _interior_max(out):
    return float(np.abs(out[1:-1, 1:-1]).max())


def linear2d_step(out, u, k2x, k2y, k1x, k1y, kxy, kxxyy, kxxy, kyyx, src,
                  src_scale=1.0):
    """Nine-point affine update; coefficients may be scalars or full-grid arrays.

    Folded coefficients: k2x ~ tau*A2x/hx^2, k1x ~ tau*A1x/(2hx),
    kxy ~ tau*Axy/(4hxhy), kxxyy ~ tau^2*ab/(hx^2hy^2),
    kxxy ~ tau^2*a*d/(2hx^2hy), kyyx ~ tau^2*b*c/(2hy^2hx).
    src, if given, is the full-grid tau-weighted source (times src_scale).
    Exactly-zero scalar coefficient groups are skipped; adding zero terms
    never changes IEEE sums, so the result is identical either way.
    """
    c, e, w, n, s, ne, nw, se, sw = _shifts2(u)

    def crop(k):
        return k[1:-1, 1:-1] if isinstance(k, np.ndarray) else k

    scalar = not isinstance(k2x, np.ndarray)
    has_conv = not scalar or (k1x != 0.0 or k1y != 0.0 or kxy != 0.0
                              or kxxy != 0.0 or kyyx != 0.0)
    has_cross = not scalar or kxxyy != 0.0

    d2x = e - 2.0 * c + w
    d2y = n - 2.0 * c + s

    acc = c + crop(k2x) * d2x
    acc += crop(k2y) * d2y
    if has_conv or has_cross:
        d2x_n = ne - 2.0 * n + nw
        d2x_s = se - 2.0 * s + sw
    if has_conv:
        acc += crop(k1x) * (e - w)
        acc += crop(k1y) * (n - s)
        acc += crop(kxy) * (ne - nw - se + sw)
    if has_cross:
        acc += kxxyy * (d2x_n - 2.0 * d2x + d2x_s)
    if has_conv:
        acc += crop(kxxy) * (d2x_n - d2x_s)
        acc += crop(kyyx) * ((ne - nw) - 2.0 * (e - w) + (se - sw))
    if src is not None:
        acc += src_scale * src[1:-1, 1:-1]
    out[1:-1, 1:-1] = acc
    return _interior_max(out)


def nonlinear2d_step(out, u, a, b, tau, hx, hy, F1, F2, F3, G1, G2, G3, R0, R1, R2):
    """Corrected step for flux/reaction problems.

    F*/G*/R* are full-grid arrays of the flux and reaction derivatives
    evaluated at the level-k field (F1 = f'(u) etc., R0 = r(u)).
    """
    c, e, w, n, s, ne, nw, se, sw = _shifts2(u)
    crop = lambda A: A[1:-1, 1:-1]
    F1, F2, F3 = crop(F1), crop(F2), crop(F3)
    G1, G2, G3 = crop(G1), crop(G2), crop(G3)
    R0, R1, R2 = crop(R0), crop(R1), crop(R2)

    # reciprocals mirror the compiled kernel so both backends round alike
    i2hx, i2hy = 1.0 / (2.0 * hx), 1.0 / (2.0 * hy)
    ihx2, ihy2 = 1.0 / (hx * hx), 1.0 / (hy * hy)
    dxu = (e - w) * i2hx
    dyu = (n - s) * i2hy
    d2x_c = e - 2.0 * c + w
    d2xu = d2x_c * ihx2
    d2yu = (n - 2.0 * c + s) * ihy2
    dxdyu = (ne - nw - se + sw) * (1.0 / (4.0 * hx * hy))
    d2x_n = ne - 2.0 * n + nw
    d2x_s = se - 2.0 * s + sw
    d2xd2yu = (d2x_n - 2.0 * d2x_c + d2x_s) * (ihx2 * ihy2)
    dy_d2xu = (d2x_n - d2x_s) * (1.0 / (hx * hx * 2.0 * hy))
    dx_d2yu = ((ne - 2.0 * e + se) - (nw - 2.0 * w + sw)) * (1.0 / (hy * hy * 2.0 * hx))

    axx = a + 0.5 * tau * (F1 * F1 + 2.0 * a * R1) \
        - 2.0 * a * tau * F2 * dxu - a * tau * G2 * dyu
    ayy = b + 0.5 * tau * (G1 * G1 + 2.0 * b * R1) \
        - 2.0 * b * tau * G2 * dyu - b * tau * F2 * dxu
    cx = F1 + 0.5 * tau * (F2 * R0 + 2.0 * F1 * R1)
    cy = G1 + 0.5 * tau * (G2 * R0 + 2.0 * G1 * R1)

    rhs = axx * d2xu + ayy * d2yu - cx * dxu - cy * dyu + R0
    rhs += tau * (a * b) * d2xd2yu - b * tau * F1 * dx_d2yu - a * tau * G1 * dy_d2xu
    rhs += 0.5 * tau * (2.0 * F1 * F2 + a * R2 - a * F3 * dxu - a * G3 * dyu) * (dxu * dxu)
    rhs += 0.5 * tau * (2.0 * G1 * G2 + b * R2 - b * G3 * dyu - b * F3 * dxu) * (dyu * dyu)
    rhs += tau * (F1 * G1 - a * G2 * dxu - b * F2 * dyu) * dxdyu
    rhs += tau * (F2 * G1 + F1 * G2) * (dxu * dyu)
    rhs += 0.5 * tau * R1 * R0

    out[1:-1, 1:-1] = c + tau * rhs
    return _interior_max(out)


def nonlinear2d_classical_step(out, u, a, b, tau, hx, hy, F1, G1, R0):
    """Forward Euler + central differences baseline for flux/reaction problems."""
    c, e, w, n, s, ne, nw, se, sw = _shifts2(u)
    crop = lambda A: A[1:-1, 1:-1]
    dxu = (e - w) * (1.0 / (2.0 * hx))
    dyu = (n - s) * (1.0 / (2.0 * hy))
    d2xu = (e - 2.0 * c + w) * (1.0 / (hx * hx))
    d2yu = (n - 2.0 * c + s) * (1.0 / (hy * hy))
    rhs = -crop(F1) * dxu - crop(G1) * dyu + a * d2xu + b * d2yu + crop(R0)
    out[1:-1, 1:-1] = c + tau * rhs
    return _interior_max(out)


def _shifts3(u):
    c = u[1:-1, 1:-1, 1:-1]
    xe = u[1:-1, 1:-1, 2:]
    xw = u[1:-1, 1:-1, :-2]
    yn = u[1:-1, 2:, 1:-1]
    ys = u[1:-1, :-2, 1:-1]
    zt = u[2:, 1:-1, 1:-1]
    zb = u[:-2, 1:-1, 1:-1]
    return c, xe, xw, yn, ys, zt, zb


def linear3d_step(out, u, k2x, k2y, k2z, kxxyy, kyyzz, kxxzz, src,
                  src_scale=1.0):
    """Constant-coefficient 3D diffusion update with pairwise cross terms."""
    c, xe, xw, yn, ys, zt, zb = _shifts3(u)
    d2x = xe - 2.0 * c + xw
    d2y = yn - 2.0 * c + ys
    d2z = zt - 2.0 * c + zb

    acc = c + k2x * d2x
    acc += k2y * d2y
    acc += k2z * d2z
    if kxxyy != 0.0 or kyyzz != 0.0 or kxxzz != 0.0:
        # xy composite: second x-difference on the j+1, j, j-1 planes
        d2x_yn = u[1:-1, 2:, 2:] - 2.0 * yn + u[1:-1, 2:, :-2]
        d2x_ys = u[1:-1, :-2, 2:] - 2.0 * ys + u[1:-1, :-2, :-2]
        dd_xy = d2x_yn - 2.0 * d2x + d2x_ys
        # yz composite
        d2y_zt = u[2:, 2:, 1:-1] - 2.0 * zt + u[2:, :-2, 1:-1]
        d2y_zb = u[:-2, 2:, 1:-1] - 2.0 * zb + u[:-2, :-2, 1:-1]
        dd_yz = d2y_zt - 2.0 * d2y + d2y_zb
        # xz composite
        d2x_zt = u[2:, 1:-1, 2:] - 2.0 * zt + u[2:, 1:-1, :-2]
        d2x_zb = u[:-2, 1:-1, 2:] - 2.0 * zb + u[:-2, 1:-1, :-2]
        dd_xz = d2x_zt - 2.0 * d2x + d2x_zb
        acc += kxxyy * dd_xy
        acc += kyyzz * dd_yz
        acc += kxxzz * dd_xz
    if src is not None:
        acc += src_scale * src[1:-1, 1:-1, 1:-1]
    out[1:-1, 1:-1, 1:-1] = acc
    return float(np.abs(out[1:-1, 1:-1, 1:-1]).max())


def linear3d_full_step(out, u, k2x, k2y, k2z, k1x, k1y, k1z,
                       kxxyy, kyyzz, kxxzz, kxy, kyz, kxz,
                       kxxy, kyyx, kxxz, kzzx, kyyz, kzzy, src,
                       src_scale=1.0):
    """3D update with constant convection: adds centered, mixed and d2*dc terms."""
    c, xe, xw, yn, ys, zt, zb = _shifts3(u)
    d2x = xe - 2.0 * c + xw
    d2y = yn - 2.0 * c + ys
    d2z = zt - 2.0 * c + zb

    xeyn = u[1:-1, 2:, 2:]
    xwyn = u[1:-1, 2:, :-2]
    xeys = u[1:-1, :-2, 2:]
    xwys = u[1:-1, :-2, :-2]
    xezt = u[2:, 1:-1, 2:]
    xwzt = u[2:, 1:-1, :-2]
    xezb = u[:-2, 1:-1, 2:]
    xwzb = u[:-2, 1:-1, :-2]
    ynzt = u[2:, 2:, 1:-1]
    yszt = u[2:, :-2, 1:-1]
    ynzb = u[:-2, 2:, 1:-1]
    yszb = u[:-2, :-2, 1:-1]

    d2x_yn = xeyn - 2.0 * yn + xwyn
    d2x_ys = xeys - 2.0 * ys + xwys
    d2x_zt = xezt - 2.0 * zt + xwzt
    d2x_zb = xezb - 2.0 * zb + xwzb
    d2y_zt = ynzt - 2.0 * zt + yszt
    d2y_zb = ynzb - 2.0 * zb + yszb
    d2y_xe = xeyn - 2.0 * xe + xeys
    d2y_xw = xwyn - 2.0 * xw + xwys
    d2z_xe = xezt - 2.0 * xe + xezb
    d2z_xw = xwzt - 2.0 * xw + xwzb
    d2z_yn = ynzt - 2.0 * yn + ynzb
    d2z_ys = yszt - 2.0 * ys + yszb

    acc = c + k2x * d2x
    acc += k2y * d2y
    acc += k2z * d2z
    acc += k1x * (xe - xw)
    acc += k1y * (yn - ys)
    acc += k1z * (zt - zb)
    acc += kxxyy * (d2x_yn - 2.0 * d2x + d2x_ys)
    acc += kyyzz * (d2y_zt - 2.0 * d2y + d2y_zb)
    acc += kxxzz * (d2x_zt - 2.0 * d2x + d2x_zb)
    acc += kxy * (xeyn - xwyn - xeys + xwys)
    acc += kyz * (ynzt - yszt - ynzb + yszb)
    acc += kxz * (xezt - xwzt - xezb + xwzb)
    acc += kxxy * (d2x_yn - d2x_ys)
    acc += kyyx * (d2y_xe - d2y_xw)
    acc += kxxz * (d2x_zt - d2x_zb)
    acc += kzzx * (d2z_xe - d2z_xw)
    acc += kyyz * (d2y_zt - d2y_zb)
    acc += kzzy * (d2z_yn - d2z_ys)
    if src is not None:
        acc += src_scale * src[1:-1, 1:-1, 1:-1]
    out[1:-1, 1:-1, 1:-1] = acc
    return float(np.abs(out[1:-1, 1:-1, 1:-1]).max())


def max_abs(a) -> float:
    return float(np.abs(a).max())


def max_abs_diff(a, b) -> float:
    return float(np.abs(a - b).max())


def max_abs_scaled_diff(a, base, scale) -> float:
    return float(np.abs(a - scale * base).max())

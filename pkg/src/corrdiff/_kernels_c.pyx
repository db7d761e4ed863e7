# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled time-step kernels.

Same contracts as ``_kernels_py``: write the interior of ``out`` from
level-k values in ``u``, leave the boundary ring alone, return the max
absolute interior value.  Per-point arithmetic follows the numpy backend
term for term (the build disables FP contraction so both backends round
identically).
"""

import numpy as np

cimport numpy as cnp
from cython.parallel cimport prange
from libc.math cimport fabs

BACKEND = "compiled"


cdef inline double _rowmax_reduce(double[:] rowmax, Py_ssize_t nrows) noexcept nogil:
    cdef double m = 0.0
    cdef Py_ssize_t r
    for r in range(nrows):
        if rowmax[r] > m:
            m = rowmax[r]
        elif rowmax[r] != rowmax[r]:   # NaN is sticky
            return rowmax[r]
    return m


def linear2d_const_step(double[:, ::1] out, double[:, ::1] u,
                        double k2x, double k2y, double k1x, double k1y,
                        double kxy, double kxxyy, double kxxy, double kyyx,
                        src, double src_scale=1.0):
    """Adding exactly-zero terms never changes IEEE sums, so the lean loops
    for the diffusion-only coefficient patterns are bit-identical to the
    full one."""
    cdef Py_ssize_t nj = u.shape[0], ni = u.shape[1]
    cdef Py_ssize_t i, j
    cdef double d2x, d2y, d2x_n, d2x_s, acc, rm, v
    cdef bint has_src = src is not None
    cdef double[:, ::1] s_mv = src if has_src else u
    cdef bint has_conv = (k1x != 0.0 or k1y != 0.0 or kxy != 0.0
                          or kxxy != 0.0 or kyyx != 0.0)
    cdef bint has_cross = kxxyy != 0.0
    rowmax_arr = np.zeros(nj, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for j in prange(1, nj - 1, nogil=True, schedule='static'):
        rm = 0.0
        if has_conv:
            for i in range(1, ni - 1):
                d2x = u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]
                d2y = u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]
                d2x_n = u[j + 1, i + 1] - 2.0 * u[j + 1, i] + u[j + 1, i - 1]
                d2x_s = u[j - 1, i + 1] - 2.0 * u[j - 1, i] + u[j - 1, i - 1]
                acc = u[j, i] + k2x * d2x
                acc = acc + k2y * d2y
                acc = acc + k1x * (u[j, i + 1] - u[j, i - 1])
                acc = acc + k1y * (u[j + 1, i] - u[j - 1, i])
                acc = acc + kxy * (u[j + 1, i + 1] - u[j + 1, i - 1]
                                   - u[j - 1, i + 1] + u[j - 1, i - 1])
                acc = acc + kxxyy * (d2x_n - 2.0 * d2x + d2x_s)
                acc = acc + kxxy * (d2x_n - d2x_s)
                acc = acc + kyyx * ((u[j + 1, i + 1] - u[j + 1, i - 1])
                                    - 2.0 * (u[j, i + 1] - u[j, i - 1])
                                    + (u[j - 1, i + 1] - u[j - 1, i - 1]))
                if has_src:
                    acc = acc + src_scale * s_mv[j, i]
                out[j, i] = acc
                v = fabs(acc)
                if v > rm:
                    rm = v
                elif v != v:
                    rm = v
        elif has_cross:
            for i in range(1, ni - 1):
                d2x = u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]
                d2y = u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]
                d2x_n = u[j + 1, i + 1] - 2.0 * u[j + 1, i] + u[j + 1, i - 1]
                d2x_s = u[j - 1, i + 1] - 2.0 * u[j - 1, i] + u[j - 1, i - 1]
                acc = u[j, i] + k2x * d2x
                acc = acc + k2y * d2y
                acc = acc + kxxyy * (d2x_n - 2.0 * d2x + d2x_s)
                if has_src:
                    acc = acc + src_scale * s_mv[j, i]
                out[j, i] = acc
                v = fabs(acc)
                if v > rm:
                    rm = v
                elif v != v:
                    rm = v
        else:
            for i in range(1, ni - 1):
                d2x = u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]
                d2y = u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]
                acc = u[j, i] + k2x * d2x
                acc = acc + k2y * d2y
                if has_src:
                    acc = acc + src_scale * s_mv[j, i]
                out[j, i] = acc
                v = fabs(acc)
                if v > rm:
                    rm = v
                elif v != v:
                    rm = v
        rowmax[j] = rm
    return _rowmax_reduce(rowmax, nj)


def linear2d_var_step(double[:, ::1] out, double[:, ::1] u,
                      double[:, ::1] k2x, double[:, ::1] k2y,
                      double[:, ::1] k1x, double[:, ::1] k1y,
                      double[:, ::1] kxy, double kxxyy,
                      double[:, ::1] kxxy, double[:, ::1] kyyx,
                      src, double src_scale=1.0):
    cdef Py_ssize_t nj = u.shape[0], ni = u.shape[1]
    cdef Py_ssize_t i, j
    cdef double d2x, d2y, d2x_n, d2x_s, acc, rm, v
    cdef bint has_src = src is not None
    cdef double[:, ::1] s_mv = src if has_src else u
    rowmax_arr = np.zeros(nj, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for j in prange(1, nj - 1, nogil=True, schedule='static'):
        rm = 0.0
        for i in range(1, ni - 1):
            d2x = u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]
            d2y = u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]
            d2x_n = u[j + 1, i + 1] - 2.0 * u[j + 1, i] + u[j + 1, i - 1]
            d2x_s = u[j - 1, i + 1] - 2.0 * u[j - 1, i] + u[j - 1, i - 1]
            acc = u[j, i] + k2x[j, i] * d2x
            acc = acc + k2y[j, i] * d2y
            acc = acc + k1x[j, i] * (u[j, i + 1] - u[j, i - 1])
            acc = acc + k1y[j, i] * (u[j + 1, i] - u[j - 1, i])
            acc = acc + kxy[j, i] * (u[j + 1, i + 1] - u[j + 1, i - 1]
                                     - u[j - 1, i + 1] + u[j - 1, i - 1])
            acc = acc + kxxyy * (d2x_n - 2.0 * d2x + d2x_s)
            acc = acc + kxxy[j, i] * (d2x_n - d2x_s)
            acc = acc + kyyx[j, i] * ((u[j + 1, i + 1] - u[j + 1, i - 1])
                                      - 2.0 * (u[j, i + 1] - u[j, i - 1])
                                      + (u[j - 1, i + 1] - u[j - 1, i - 1]))
            if has_src:
                acc = acc + src_scale * s_mv[j, i]
            out[j, i] = acc
            v = fabs(acc)
            if v > rm:
                rm = v
            elif v != v:
                rm = v
        rowmax[j] = rm
    return _rowmax_reduce(rowmax, nj)


def nonlinear2d_step(double[:, ::1] out, double[:, ::1] u,
                     double a, double b, double tau, double hx, double hy,
                     double[:, ::1] F1, double[:, ::1] F2, double[:, ::1] F3,
                     double[:, ::1] G1, double[:, ::1] G2, double[:, ::1] G3,
                     double[:, ::1] R0, double[:, ::1] R1, double[:, ::1] R2):
    cdef Py_ssize_t nj = u.shape[0], ni = u.shape[1]
    cdef Py_ssize_t i, j
    cdef double i2hx = 1.0 / (2.0 * hx), i2hy = 1.0 / (2.0 * hy)
    cdef double ihx2 = 1.0 / (hx * hx), ihy2 = 1.0 / (hy * hy)
    cdef double ixy = 1.0 / (4.0 * hx * hy)
    cdef double ixxy = 1.0 / (hx * hx * 2.0 * hy), iyyx = 1.0 / (hy * hy * 2.0 * hx)
    cdef double ixxyy = ihx2 * ihy2
    cdef double dxu, dyu, d2xu, d2yu, dxdyu, d2xd2yu, dy_d2xu, dx_d2yu
    cdef double d2x_n, d2x_c, d2x_s
    cdef double axx, ayy, cx, cy, rhs, rm, v, f1, f2, f3, g1, g2, g3, r0, r1, r2
    rowmax_arr = np.zeros(nj, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for j in prange(1, nj - 1, nogil=True, schedule='static'):
        rm = 0.0
        for i in range(1, ni - 1):
            f1 = F1[j, i]; f2 = F2[j, i]; f3 = F3[j, i]
            g1 = G1[j, i]; g2 = G2[j, i]; g3 = G3[j, i]
            r0 = R0[j, i]; r1 = R1[j, i]; r2 = R2[j, i]

            dxu = (u[j, i + 1] - u[j, i - 1]) * i2hx
            dyu = (u[j + 1, i] - u[j - 1, i]) * i2hy
            d2x_c = u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]
            d2xu = d2x_c * ihx2
            d2yu = (u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]) * ihy2
            dxdyu = (u[j + 1, i + 1] - u[j + 1, i - 1]
                     - u[j - 1, i + 1] + u[j - 1, i - 1]) * ixy
            d2x_n = u[j + 1, i + 1] - 2.0 * u[j + 1, i] + u[j + 1, i - 1]
            d2x_s = u[j - 1, i + 1] - 2.0 * u[j - 1, i] + u[j - 1, i - 1]
            d2xd2yu = (d2x_n - 2.0 * d2x_c + d2x_s) * ixxyy
            dy_d2xu = (d2x_n - d2x_s) * ixxy
            dx_d2yu = ((u[j + 1, i + 1] - 2.0 * u[j, i + 1] + u[j - 1, i + 1])
                       - (u[j + 1, i - 1] - 2.0 * u[j, i - 1] + u[j - 1, i - 1])) * iyyx

            axx = a + 0.5 * tau * (f1 * f1 + 2.0 * a * r1) \
                - 2.0 * a * tau * f2 * dxu - a * tau * g2 * dyu
            ayy = b + 0.5 * tau * (g1 * g1 + 2.0 * b * r1) \
                - 2.0 * b * tau * g2 * dyu - b * tau * f2 * dxu
            cx = f1 + 0.5 * tau * (f2 * r0 + 2.0 * f1 * r1)
            cy = g1 + 0.5 * tau * (g2 * r0 + 2.0 * g1 * r1)

            rhs = axx * d2xu + ayy * d2yu - cx * dxu - cy * dyu + r0
            rhs = rhs + (tau * (a * b) * d2xd2yu - b * tau * f1 * dx_d2yu
                         - a * tau * g1 * dy_d2xu)
            rhs = rhs + 0.5 * tau * (2.0 * f1 * f2 + a * r2
                                     - a * f3 * dxu - a * g3 * dyu) * (dxu * dxu)
            rhs = rhs + 0.5 * tau * (2.0 * g1 * g2 + b * r2
                                     - b * g3 * dyu - b * f3 * dxu) * (dyu * dyu)
            rhs = rhs + tau * (f1 * g1 - a * g2 * dxu - b * f2 * dyu) * dxdyu
            rhs = rhs + tau * (f2 * g1 + f1 * g2) * (dxu * dyu)
            rhs = rhs + 0.5 * tau * r1 * r0

            v = u[j, i] + tau * rhs
            out[j, i] = v
            v = fabs(v)
            if v > rm:
                rm = v
            elif v != v:
                rm = v
        rowmax[j] = rm
    return _rowmax_reduce(rowmax, nj)


def nonlinear2d_classical_step(double[:, ::1] out, double[:, ::1] u,
                               double a, double b, double tau, double hx, double hy,
                               double[:, ::1] F1, double[:, ::1] G1, double[:, ::1] R0):
    cdef Py_ssize_t nj = u.shape[0], ni = u.shape[1]
    cdef Py_ssize_t i, j
    cdef double i2hx = 1.0 / (2.0 * hx), i2hy = 1.0 / (2.0 * hy)
    cdef double ihx2 = 1.0 / (hx * hx), ihy2 = 1.0 / (hy * hy)
    cdef double dxu, dyu, d2xu, d2yu, rhs, rm, v
    rowmax_arr = np.zeros(nj, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for j in prange(1, nj - 1, nogil=True, schedule='static'):
        rm = 0.0
        for i in range(1, ni - 1):
            dxu = (u[j, i + 1] - u[j, i - 1]) * i2hx
            dyu = (u[j + 1, i] - u[j - 1, i]) * i2hy
            d2xu = (u[j, i + 1] - 2.0 * u[j, i] + u[j, i - 1]) * ihx2
            d2yu = (u[j + 1, i] - 2.0 * u[j, i] + u[j - 1, i]) * ihy2
            rhs = -F1[j, i] * dxu - G1[j, i] * dyu + a * d2xu + b * d2yu + R0[j, i]
            v = u[j, i] + tau * rhs
            out[j, i] = v
            v = fabs(v)
            if v > rm:
                rm = v
            elif v != v:
                rm = v
        rowmax[j] = rm
    return _rowmax_reduce(rowmax, nj)


def linear3d_step(double[:, :, ::1] out, double[:, :, ::1] u,
                  double k2x, double k2y, double k2z,
                  double kxxyy, double kyyzz, double kxxzz, src,
                  double src_scale=1.0):
    cdef Py_ssize_t nl = u.shape[0], nj = u.shape[1], ni = u.shape[2]
    cdef Py_ssize_t i, j, l
    cdef double d2x, d2y, d2z, d2x_yn, d2x_ys, d2y_zt, d2y_zb, d2x_zt, d2x_zb
    cdef double acc, rm, v
    cdef bint has_src = src is not None
    cdef bint has_cross = kxxyy != 0.0 or kyyzz != 0.0 or kxxzz != 0.0
    cdef double[:, :, ::1] s_mv = src if has_src else u
    rowmax_arr = np.zeros(nl, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for l in prange(1, nl - 1, nogil=True, schedule='static'):
        rm = 0.0
        for j in range(1, nj - 1):
            if has_cross:
                for i in range(1, ni - 1):
                    d2x = u[l, j, i + 1] - 2.0 * u[l, j, i] + u[l, j, i - 1]
                    d2y = u[l, j + 1, i] - 2.0 * u[l, j, i] + u[l, j - 1, i]
                    d2z = u[l + 1, j, i] - 2.0 * u[l, j, i] + u[l - 1, j, i]
                    d2x_yn = u[l, j + 1, i + 1] - 2.0 * u[l, j + 1, i] + u[l, j + 1, i - 1]
                    d2x_ys = u[l, j - 1, i + 1] - 2.0 * u[l, j - 1, i] + u[l, j - 1, i - 1]
                    d2y_zt = u[l + 1, j + 1, i] - 2.0 * u[l + 1, j, i] + u[l + 1, j - 1, i]
                    d2y_zb = u[l - 1, j + 1, i] - 2.0 * u[l - 1, j, i] + u[l - 1, j - 1, i]
                    d2x_zt = u[l + 1, j, i + 1] - 2.0 * u[l + 1, j, i] + u[l + 1, j, i - 1]
                    d2x_zb = u[l - 1, j, i + 1] - 2.0 * u[l - 1, j, i] + u[l - 1, j, i - 1]
                    acc = u[l, j, i] + k2x * d2x
                    acc = acc + k2y * d2y
                    acc = acc + k2z * d2z
                    acc = acc + kxxyy * (d2x_yn - 2.0 * d2x + d2x_ys)
                    acc = acc + kyyzz * (d2y_zt - 2.0 * d2y + d2y_zb)
                    acc = acc + kxxzz * (d2x_zt - 2.0 * d2x + d2x_zb)
                    if has_src:
                        acc = acc + src_scale * s_mv[l, j, i]
                    out[l, j, i] = acc
                    v = fabs(acc)
                    if v > rm:
                        rm = v
                    elif v != v:
                        rm = v
            else:
                for i in range(1, ni - 1):
                    d2x = u[l, j, i + 1] - 2.0 * u[l, j, i] + u[l, j, i - 1]
                    d2y = u[l, j + 1, i] - 2.0 * u[l, j, i] + u[l, j - 1, i]
                    d2z = u[l + 1, j, i] - 2.0 * u[l, j, i] + u[l - 1, j, i]
                    acc = u[l, j, i] + k2x * d2x
                    acc = acc + k2y * d2y
                    acc = acc + k2z * d2z
                    if has_src:
                        acc = acc + src_scale * s_mv[l, j, i]
                    out[l, j, i] = acc
                    v = fabs(acc)
                    if v > rm:
                        rm = v
                    elif v != v:
                        rm = v
        rowmax[l] = rm
    return _rowmax_reduce(rowmax, nl)


def linear3d_full_step(double[:, :, ::1] out, double[:, :, ::1] u,
                       double k2x, double k2y, double k2z,
                       double k1x, double k1y, double k1z,
                       double kxxyy, double kyyzz, double kxxzz,
                       double kxy, double kyz, double kxz,
                       double kxxy, double kyyx, double kxxz,
                       double kzzx, double kyyz, double kzzy, src,
                       double src_scale=1.0):
    cdef Py_ssize_t nl = u.shape[0], nj = u.shape[1], ni = u.shape[2]
    cdef Py_ssize_t i, j, l
    cdef double d2x, d2y, d2z
    cdef double d2x_yn, d2x_ys, d2x_zt, d2x_zb, d2y_zt, d2y_zb
    cdef double d2y_xe, d2y_xw, d2z_xe, d2z_xw, d2z_yn, d2z_ys
    cdef double acc, rm, v
    cdef bint has_src = src is not None
    cdef double[:, :, ::1] s_mv = src if has_src else u
    rowmax_arr = np.zeros(nl, dtype=np.float64)
    cdef double[:] rowmax = rowmax_arr

    for l in prange(1, nl - 1, nogil=True, schedule='static'):
        rm = 0.0
        for j in range(1, nj - 1):
            for i in range(1, ni - 1):
                d2x = u[l, j, i + 1] - 2.0 * u[l, j, i] + u[l, j, i - 1]
                d2y = u[l, j + 1, i] - 2.0 * u[l, j, i] + u[l, j - 1, i]
                d2z = u[l + 1, j, i] - 2.0 * u[l, j, i] + u[l - 1, j, i]
                d2x_yn = u[l, j + 1, i + 1] - 2.0 * u[l, j + 1, i] + u[l, j + 1, i - 1]
                d2x_ys = u[l, j - 1, i + 1] - 2.0 * u[l, j - 1, i] + u[l, j - 1, i - 1]
                d2x_zt = u[l + 1, j, i + 1] - 2.0 * u[l + 1, j, i] + u[l + 1, j, i - 1]
                d2x_zb = u[l - 1, j, i + 1] - 2.0 * u[l - 1, j, i] + u[l - 1, j, i - 1]
                d2y_zt = u[l + 1, j + 1, i] - 2.0 * u[l + 1, j, i] + u[l + 1, j - 1, i]
                d2y_zb = u[l - 1, j + 1, i] - 2.0 * u[l - 1, j, i] + u[l - 1, j - 1, i]
                d2y_xe = u[l, j + 1, i + 1] - 2.0 * u[l, j, i + 1] + u[l, j - 1, i + 1]
                d2y_xw = u[l, j + 1, i - 1] - 2.0 * u[l, j, i - 1] + u[l, j - 1, i - 1]
                d2z_xe = u[l + 1, j, i + 1] - 2.0 * u[l, j, i + 1] + u[l - 1, j, i + 1]
                d2z_xw = u[l + 1, j, i - 1] - 2.0 * u[l, j, i - 1] + u[l - 1, j, i - 1]
                d2z_yn = u[l + 1, j + 1, i] - 2.0 * u[l, j + 1, i] + u[l - 1, j + 1, i]
                d2z_ys = u[l + 1, j - 1, i] - 2.0 * u[l, j - 1, i] + u[l - 1, j - 1, i]

                acc = u[l, j, i] + k2x * d2x
                acc = acc + k2y * d2y
                acc = acc + k2z * d2z
                acc = acc + k1x * (u[l, j, i + 1] - u[l, j, i - 1])
                acc = acc + k1y * (u[l, j + 1, i] - u[l, j - 1, i])
                acc = acc + k1z * (u[l + 1, j, i] - u[l - 1, j, i])
                acc = acc + kxxyy * (d2x_yn - 2.0 * d2x + d2x_ys)
                acc = acc + kyyzz * (d2y_zt - 2.0 * d2y + d2y_zb)
                acc = acc + kxxzz * (d2x_zt - 2.0 * d2x + d2x_zb)
                acc = acc + kxy * (u[l, j + 1, i + 1] - u[l, j + 1, i - 1]
                                   - u[l, j - 1, i + 1] + u[l, j - 1, i - 1])
                acc = acc + kyz * (u[l + 1, j + 1, i] - u[l + 1, j - 1, i]
                                   - u[l - 1, j + 1, i] + u[l - 1, j - 1, i])
                acc = acc + kxz * (u[l + 1, j, i + 1] - u[l + 1, j, i - 1]
                                   - u[l - 1, j, i + 1] + u[l - 1, j, i - 1])
                acc = acc + kxxy * (d2x_yn - d2x_ys)
                acc = acc + kyyx * (d2y_xe - d2y_xw)
                acc = acc + kxxz * (d2x_zt - d2x_zb)
                acc = acc + kzzx * (d2z_xe - d2z_xw)
                acc = acc + kyyz * (d2y_zt - d2y_zb)
                acc = acc + kzzy * (d2z_yn - d2z_ys)
                if has_src:
                    acc = acc + src_scale * s_mv[l, j, i]
                out[l, j, i] = acc
                v = fabs(acc)
                if v > rm:
                    rm = v
                elif v != v:
                    rm = v
        rowmax[l] = rm
    return _rowmax_reduce(rowmax, nl)


DEF NCHUNK = 32


def max_abs(cnp.ndarray a):
    cdef double[::1] flat = np.ascontiguousarray(a).reshape(-1)
    cdef Py_ssize_t k, c, lo, hi, nk = flat.shape[0]
    cdef Py_ssize_t step = nk // NCHUNK + 1
    cdef double m, v
    chunk_arr = np.zeros(NCHUNK, dtype=np.float64)
    cdef double[:] chunks = chunk_arr
    for c in prange(NCHUNK, nogil=True, schedule='static'):
        m = 0.0
        lo = c * step
        hi = min(lo + step, nk)
        for k in range(lo, hi):
            v = fabs(flat[k])
            if v > m:
                m = v
            elif v != v:
                m = v
        chunks[c] = m
    return _rowmax_reduce(chunks, NCHUNK)


def max_abs_diff(cnp.ndarray a, cnp.ndarray b):
    cdef double[::1] fa = np.ascontiguousarray(a).reshape(-1)
    cdef double[::1] fb = np.ascontiguousarray(b).reshape(-1)
    cdef Py_ssize_t k, c, lo, hi, nk = fa.shape[0]
    cdef Py_ssize_t step = nk // NCHUNK + 1
    cdef double m, v
    if fb.shape[0] != nk:
        raise ValueError("shape mismatch")
    chunk_arr = np.zeros(NCHUNK, dtype=np.float64)
    cdef double[:] chunks = chunk_arr
    for c in prange(NCHUNK, nogil=True, schedule='static'):
        m = 0.0
        lo = c * step
        hi = min(lo + step, nk)
        for k in range(lo, hi):
            v = fabs(fa[k] - fb[k])
            if v > m:
                m = v
            elif v != v:
                m = v
        chunks[c] = m
    return _rowmax_reduce(chunks, NCHUNK)


def max_abs_scaled_diff(cnp.ndarray a, cnp.ndarray base, double scale):
    """max |a - scale*base| in one pass (error tracking against an exact
    field stored as spatial-part times per-level scalar)."""
    cdef double[::1] fa = np.ascontiguousarray(a).reshape(-1)
    cdef double[::1] fb = np.ascontiguousarray(base).reshape(-1)
    cdef Py_ssize_t k, c, lo, hi, nk = fa.shape[0]
    cdef Py_ssize_t step = nk // NCHUNK + 1
    cdef double m, v
    if fb.shape[0] != nk:
        raise ValueError("shape mismatch")
    chunk_arr = np.zeros(NCHUNK, dtype=np.float64)
    cdef double[:] chunks = chunk_arr
    for c in prange(NCHUNK, nogil=True, schedule='static'):
        m = 0.0
        lo = c * step
        hi = min(lo + step, nk)
        for k in range(lo, hi):
            v = fabs(fa[k] - scale * fb[k])
            if v > m:
                m = v
            elif v != v:
                m = v
        chunks[c] = m
    return _rowmax_reduce(chunks, NCHUNK)

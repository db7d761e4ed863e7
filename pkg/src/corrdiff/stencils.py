"""Per-point discrete difference operators on interior grid points.

These are the reference forms: exact three/nine-point formulas evaluated one
point at a time.  The time-stepping kernels fuse them into single passes; the
functions here are what those kernels are tested against.

  d2x:  (v[i+1,j] - 2 v[i,j] + v[i-1,j]) / hx^2      exact on cubics in x
  dcx:  (v[i+1,j] - v[i-1,j]) / (2 hx)               exact on quadratics in x

All operators raise on non-interior indices.
"""

from __future__ import annotations



def _check_interior2(v, i, j):
    nj, ni = v.shape
    if not (1 <= i <= ni - 2 and 1 <= j <= nj - 2):
        raise IndexError(f"(i={i}, j={j}) is not interior for shape {v.shape}")


def _check_interior3(v, i, j, l):
    nl, nj, ni = v.shape
    if not (1 <= i <= ni - 2 and 1 <= j <= nj - 2 and 1 <= l <= nl - 2):
        raise IndexError(f"(i={i}, j={j}, l={l}) is not interior for shape {v.shape}")


def d2x(v, grid, i, j):
    _check_interior2(v, i, j)
    return (v[j, i + 1] - 2.0 * v[j, i] + v[j, i - 1]) / grid.hx**2


def d2y(v, grid, i, j):
    _check_interior2(v, i, j)
    return (v[j + 1, i] - 2.0 * v[j, i] + v[j - 1, i]) / grid.hy**2


def dcx(v, grid, i, j):
    _check_interior2(v, i, j)
    return (v[j, i + 1] - v[j, i - 1]) / (2.0 * grid.hx)


def dcy(v, grid, i, j):
    _check_interior2(v, i, j)
    return (v[j + 1, i] - v[j - 1, i]) / (2.0 * grid.hy)


def mixed_cc(v, grid, i, j):
    """Centered cross derivative (four corner points, divisor 4 hx hy)."""
    _check_interior2(v, i, j)
    return (v[j + 1, i + 1] - v[j + 1, i - 1] - v[j - 1, i + 1] + v[j - 1, i - 1]) \
        / (4.0 * grid.hx * grid.hy)


def d2x_d2y(v, grid, i, j):
    """Nine-point composite of the two second differences."""
    _check_interior2(v, i, j)
    h2 = grid.hx**2 * grid.hy**2
    row = lambda jj: v[jj, i + 1] - 2.0 * v[jj, i] + v[jj, i - 1]
    return (row(j + 1) - 2.0 * row(j) + row(j - 1)) / h2


def d2x_dcy(v, grid, i, j):
    """Second difference in x of the centered y difference (six points)."""
    _check_interior2(v, i, j)
    row = lambda jj: v[jj, i + 1] - 2.0 * v[jj, i] + v[jj, i - 1]
    return (row(j + 1) - row(j - 1)) / (grid.hx**2 * 2.0 * grid.hy)


def d2y_dcx(v, grid, i, j):
    """Second difference in y of the centered x difference (six points)."""
    _check_interior2(v, i, j)
    col = lambda ii: v[j + 1, ii] - 2.0 * v[j, ii] + v[j - 1, ii]
    return (col(i + 1) - col(i - 1)) / (grid.hy**2 * 2.0 * grid.hx)


# 3D analogues (l is the z index, outermost axis).

def d2x3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l, j, i + 1] - 2.0 * v[l, j, i] + v[l, j, i - 1]) / grid.hx**2


def d2y3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l, j + 1, i] - 2.0 * v[l, j, i] + v[l, j - 1, i]) / grid.hy**2


def d2z3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l + 1, j, i] - 2.0 * v[l, j, i] + v[l - 1, j, i]) / grid.hz**2


def dcx3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l, j, i + 1] - v[l, j, i - 1]) / (2.0 * grid.hx)


def dcy3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l, j + 1, i] - v[l, j - 1, i]) / (2.0 * grid.hy)


def dcz3(v, grid, i, j, l):
    _check_interior3(v, i, j, l)
    return (v[l + 1, j, i] - v[l - 1, j, i]) / (2.0 * grid.hz)


def _axis_offsets(axis):
    return {(0): (0, 0, 1), (1): (0, 1, 0), (2): (1, 0, 0)}[axis]


def d2_axis3(v, grid, i, j, l, axis):
    """Second difference along axis 0=x, 1=y, 2=z."""
    _check_interior3(v, i, j, l)
    dl, dj, di = _axis_offsets(axis)
    h = (grid.hx, grid.hy, grid.hz)[axis]
    return (v[l + dl, j + dj, i + di] - 2.0 * v[l, j, i]
            + v[l - dl, j - dj, i - di]) / h**2


def dc_axis3(v, grid, i, j, l, axis):
    """Centered difference along axis 0=x, 1=y, 2=z."""
    _check_interior3(v, i, j, l)
    dl, dj, di = _axis_offsets(axis)
    h = (grid.hx, grid.hy, grid.hz)[axis]
    return (v[l + dl, j + dj, i + di] - v[l - dl, j - dj, i - di]) / (2.0 * h)


def d2_d2_axes3(v, grid, i, j, l, ax1, ax2):
    """Composite second differences along two distinct axes."""
    _check_interior3(v, i, j, l)
    dl1, dj1, di1 = _axis_offsets(ax1)
    dl2, dj2, di2 = _axis_offsets(ax2)
    h1 = (grid.hx, grid.hy, grid.hz)[ax1]
    h2 = (grid.hx, grid.hy, grid.hz)[ax2]

    def d2_at(ll, jj, ii):
        return (v[ll + dl2, jj + dj2, ii + di2] - 2.0 * v[ll, jj, ii]
                + v[ll - dl2, jj - dj2, ii - di2]) / h2**2

    return (d2_at(l + dl1, j + dj1, i + di1) - 2.0 * d2_at(l, j, i)
            + d2_at(l - dl1, j - dj1, i - di1)) / h1**2


def d2_dc_axes3(v, grid, i, j, l, ax1, ax2):
    """Second difference along ax1 of the centered difference along ax2."""
    _check_interior3(v, i, j, l)
    dl1, dj1, di1 = _axis_offsets(ax1)
    dl2, dj2, di2 = _axis_offsets(ax2)
    h1 = (grid.hx, grid.hy, grid.hz)[ax1]
    h2 = (grid.hx, grid.hy, grid.hz)[ax2]

    def dc_at(ll, jj, ii):
        return (v[ll + dl2, jj + dj2, ii + di2]
                - v[ll - dl2, jj - dj2, ii - di2]) / (2.0 * h2)

    return (dc_at(l + dl1, j + dj1, i + di1) - 2.0 * dc_at(l, j, i)
            + dc_at(l - dl1, j - dj1, i - di1)) / h1**2


def dc_dc_axes3(v, grid, i, j, l, ax1, ax2):
    """Centered cross difference along two distinct axes."""
    _check_interior3(v, i, j, l)
    dl1, dj1, di1 = _axis_offsets(ax1)
    dl2, dj2, di2 = _axis_offsets(ax2)
    h1 = (grid.hx, grid.hy, grid.hz)[ax1]
    h2 = (grid.hx, grid.hy, grid.hz)[ax2]
    return (v[l + dl1 + dl2, j + dj1 + dj2, i + di1 + di2]
            - v[l + dl1 - dl2, j + dj1 - dj2, i + di1 - di2]
            - v[l - dl1 + dl2, j - dj1 + dj2, i - di1 + di2]
            + v[l - dl1 - dl2, j - dj1 - dj2, i - di1 - di2]) / (4.0 * h1 * h2)

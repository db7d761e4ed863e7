"""Fourth-order one-sided boundary closures and the three-phase update sweep.

The five-point one-sided derivative formula

    (-25/12 u0 + 4 u1 - 3 u2 + 4/3 u3 - 1/4 u4) / h = alpha

is solved for the single boundary unknown; it is exact for polynomials of
degree <= 4.  A completed level is produced in three phases: (i) interior
points from the scheme kernel, (ii) the y-boundary rows at interior columns,
(iii) the x-boundary columns including the four corners, which read the
phase-(ii) values where their stencils touch the y-rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .grid import Grid2
from .problems import NeumannData


def close_low(w1, w2, w3, w4, h, alpha):
    """Boundary value from the four nodes inward; alpha is the outward-axis slope."""
    return (12.0 / 25.0) * (4.0 * w1 - 3.0 * w2 + (4.0 / 3.0) * w3 - 0.25 * w4
                            - h * alpha)


def close_high(w1, w2, w3, w4, h, alpha):
    """Mirror form at the high end of an axis (w1 is one node inward)."""
    return (12.0 / 25.0) * (4.0 * w1 - 3.0 * w2 + (4.0 / 3.0) * w3 - 0.25 * w4
                            + h * alpha)


def close_x_low(row, hx, alpha):
    """u at i=0 of a row along x whose nodes 1..4 are known."""
    return close_low(row[1], row[2], row[3], row[4], hx, alpha)


def close_x_high(row, hx, alpha):
    return close_high(row[-2], row[-3], row[-4], row[-5], hx, alpha)


def close_y_low(col, hy, beta):
    """u at j=0 of a column along y whose nodes 1..4 are known."""
    return close_low(col[1], col[2], col[3], col[4], hy, beta)


def close_y_high(col, hy, beta):
    return close_high(col[-2], col[-3], col[-4], col[-5], hy, beta)


@dataclass(frozen=True)
class SweepPlan:
    """Index partition of the grid into solid/hollow/star update phases.

    solid: interior points (the scheme kernel's domain);
    hollow: y-boundary rows j in {0, m2} restricted to 1 <= i <= m1-1;
    star: x-boundary columns i in {0, m1} for all j (corners included).
    """

    solid: np.ndarray
    hollow: np.ndarray
    star: np.ndarray


def sweep_plan(grid: Grid2) -> SweepPlan:
    _require_closure_room(grid)
    nj, ni = grid.shape
    solid = np.zeros((nj, ni), dtype=bool)
    solid[1:-1, 1:-1] = True
    hollow = np.zeros((nj, ni), dtype=bool)
    hollow[0, 1:-1] = True
    hollow[-1, 1:-1] = True
    star = np.zeros((nj, ni), dtype=bool)
    star[:, 0] = True
    star[:, -1] = True
    return SweepPlan(solid, hollow, star)


def _require_closure_room(grid: Grid2) -> None:
    if grid.m1 < 5 or grid.m2 < 5:
        raise ConfigError(
            f"one-sided closures need m1, m2 >= 5, got {grid.m1}x{grid.m2}")


def neumann_sweep(u: np.ndarray, grid: Grid2, data: NeumannData, t: float) -> np.ndarray:
    """Complete a level whose interior is already updated; writes u in place."""
    _require_closure_room(grid)
    hx, hy = grid.hx, grid.hy
    xs_int = grid.xs[1:-1]
    ys = grid.ys
    # hollow: y rows at interior columns
    u[0, 1:-1] = close_low(u[1, 1:-1], u[2, 1:-1], u[3, 1:-1], u[4, 1:-1],
                           hy, data.beta1(xs_int, t))
    u[-1, 1:-1] = close_high(u[-2, 1:-1], u[-3, 1:-1], u[-4, 1:-1], u[-5, 1:-1],
                             hy, data.beta2(xs_int, t))
    # star: x columns at all rows; corner stencils consume the hollow values
    u[:, 0] = close_low(u[:, 1], u[:, 2], u[:, 3], u[:, 4],
                        hx, data.alpha1(ys, t))
    u[:, -1] = close_high(u[:, -2], u[:, -3], u[:, -4], u[:, -5],
                          hx, data.alpha2(ys, t))
    return u

"""Uniform tensor-product space-time grids.

Fields are stored row-major with x fastest: a 2D field has shape
(m2+1, m1+1) indexed ``u[j, i]``, a 3D field (m3+1, m2+1, m1+1) indexed
``u[l, j, i]``.  The flat offset of (i, j) is ``j*(m1+1) + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class Grid2:
    """2D grid: m1 x m2 cells on (L1,R1)x(L2,R2), n time steps of size tau.

    rx, ry are the step ratios a*tau/hx^2, b*tau/hy^2 for the diffusion
    coefficients the grid was built with.
    """

    L1: float
    R1: float
    L2: float
    R2: float
    T: float
    m1: int
    m2: int
    n: int
    hx: float
    hy: float
    tau: float
    a: float
    b: float
    rx: float
    ry: float

    @cached_property
    def xs(self) -> np.ndarray:
        return self.L1 + self.hx * np.arange(self.m1 + 1)

    @cached_property
    def ys(self) -> np.ndarray:
        return self.L2 + self.hy * np.arange(self.m2 + 1)

    @cached_property
    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """(X, Y) arrays of shape (m2+1, m1+1)."""
        X, Y = np.meshgrid(self.xs, self.ys, indexing="xy")
        return X, Y

    def t(self, k: int) -> float:
        return k * self.tau

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m2 + 1, self.m1 + 1)

    def alloc(self) -> np.ndarray:
        return np.zeros(self.shape)


@dataclass(frozen=True)
class Grid3:
    """3D grid; layout is l-outer, then j, then i (x fastest)."""

    L1: float
    R1: float
    L2: float
    R2: float
    L3: float
    R3: float
    T: float
    m1: int
    m2: int
    m3: int
    n: int
    hx: float
    hy: float
    hz: float
    tau: float
    a: float
    b: float
    c: float
    rx: float
    ry: float
    rz: float

    @cached_property
    def xs(self) -> np.ndarray:
        return self.L1 + self.hx * np.arange(self.m1 + 1)

    @cached_property
    def ys(self) -> np.ndarray:
        return self.L2 + self.hy * np.arange(self.m2 + 1)

    @cached_property
    def zs(self) -> np.ndarray:
        return self.L3 + self.hz * np.arange(self.m3 + 1)

    @cached_property
    def mesh(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(X, Y, Z) arrays of shape (m3+1, m2+1, m1+1)."""
        Z, Y, X = np.meshgrid(self.zs, self.ys, self.xs, indexing="ij")
        return X, Y, Z

    def t(self, k: int) -> float:
        return k * self.tau

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.m3 + 1, self.m2 + 1, self.m1 + 1)

    def alloc(self) -> np.ndarray:
        return np.zeros(self.shape)


def build_grid2(L1, R1, L2, R2, T, m1, m2, n, a, b) -> Grid2:
    """Grid with tau = T/n and step ratios for diffusion coefficients (a, b)."""
    if m1 < 1 or m2 < 1 or n < 1:
        raise ConfigError(f"grid counts must be positive, got m1={m1}, m2={m2}, n={n}")
    if R1 <= L1 or R2 <= L2 or T <= 0:
        raise ConfigError("grid extents and final time must be positive")
    if a <= 0 or b <= 0:
        raise ConfigError(f"diffusion coefficients must be positive, got a={a}, b={b}")
    hx = (R1 - L1) / m1
    hy = (R2 - L2) / m2
    tau = T / n
    return Grid2(L1, R1, L2, R2, T, m1, m2, n, hx, hy, tau,
                 a, b, a * tau / hx**2, b * tau / hy**2)


def grid2_from_ratio(L1, R1, L2, R2, T, m1, m2, ratio, a, b) -> Grid2:
    """Grid whose step count comes from a requested x step ratio.

    n = round(T / (ratio*hx^2/a)) and tau = T/n, so the realized ratio
    a*tau/hx^2 deviates from the request when T/tau is fractional.
    """
    if ratio <= 0:
        raise ConfigError(f"step ratio must be positive, got {ratio}")
    hx = (R1 - L1) / m1
    n = max(1, round(T * a / (ratio * hx**2)))
    return build_grid2(L1, R1, L2, R2, T, m1, m2, n, a, b)


def build_grid3(L1, R1, L2, R2, L3, R3, T, m1, m2, m3, n, a, b, c) -> Grid3:
    if m1 < 1 or m2 < 1 or m3 < 1 or n < 1:
        raise ConfigError(
            f"grid counts must be positive, got m1={m1}, m2={m2}, m3={m3}, n={n}")
    if R1 <= L1 or R2 <= L2 or R3 <= L3 or T <= 0:
        raise ConfigError("grid extents and final time must be positive")
    if a <= 0 or b <= 0 or c <= 0:
        raise ConfigError("diffusion coefficients must be positive")
    hx = (R1 - L1) / m1
    hy = (R2 - L2) / m2
    hz = (R3 - L3) / m3
    tau = T / n
    return Grid3(L1, R1, L2, R2, L3, R3, T, m1, m2, m3, n, hx, hy, hz, tau,
                 a, b, c, a * tau / hx**2, b * tau / hy**2, c * tau / hz**2)


def grid3_from_ratio(L1, R1, L2, R2, L3, R3, T, m1, m2, m3, ratio, a, b, c) -> Grid3:
    if ratio <= 0:
        raise ConfigError(f"step ratio must be positive, got {ratio}")
    hx = (R1 - L1) / m1
    n = max(1, round(T * a / (ratio * hx**2)))
    return build_grid3(L1, R1, L2, R2, L3, R3, T, m1, m2, m3, n, a, b, c)


def index2(grid: Grid2, i: int, j: int) -> int:
    """Row-major flat offset of grid point (i, j), j outer."""
    if not (0 <= i <= grid.m1 and 0 <= j <= grid.m2):
        raise IndexError(f"(i={i}, j={j}) outside grid {grid.m1}x{grid.m2}")
    return j * (grid.m1 + 1) + i


def index3(grid: Grid3, i: int, j: int, l: int) -> int:
    """Row-major flat offset of grid point (i, j, l), l outer."""
    if not (0 <= i <= grid.m1 and 0 <= j <= grid.m2 and 0 <= l <= grid.m3):
        raise IndexError(f"(i={i}, j={j}, l={l}) outside grid")
    return (l * (grid.m2 + 1) + j) * (grid.m1 + 1) + i

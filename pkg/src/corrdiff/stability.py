"""CFL validators and the maximum-principle weight decomposition.

For constant convection the corrected update is a convex combination of the
nine level-k neighbors whenever the step-ratio and convection conditions
hold; the nine weights always sum to one.  The checks here are pure
arithmetic on (coefficients, step ratios) so a configuration can be vetted
before any allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class CflCondition:
    name: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def ok(self) -> bool:
        return self.slack >= 0.0


@dataclass(frozen=True)
class CflReport:
    conditions: tuple
    heuristic: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions)

    @property
    def margins(self) -> tuple:
        return tuple(c.slack for c in self.conditions)

    def lines(self):
        tag = " (heuristic)" if self.heuristic else ""
        for c in self.conditions:
            yield (f"{'PASS' if c.ok else 'FAIL'}  {c.name}{tag}: "
                   f"lhs={c.lhs:.6g} rhs={c.rhs:.6g} slack={c.slack:.6g}")


@dataclass(frozen=True)
class MaxPrincipleCoeffs:
    """The nine neighbor weights of the constant-coefficient corrected update.

    Order: x+1, x-1, y+1, y-1, center, then corners (+,+), (+,-), (-,+), (-,-).
    """

    S: tuple

    @property
    def total(self) -> float:
        return math.fsum(self.S)

    @property
    def min(self) -> float:
        return min(self.S)


def max_principle_coeffs(a, b, c, d, grid) -> MaxPrincipleCoeffs:
    """Neighbor weights, derived algebraically from the corrected update."""
    tau, hx, hy = grid.tau, grid.hx, grid.hy
    rx = a * tau / hx**2
    ry = b * tau / hy**2
    chx = c * hx / (2.0 * a)
    dhy = d * hy / (2.0 * b)
    cx2 = c * c * rx * rx * hx * hx / (2.0 * a * a)
    dy2 = d * d * ry * ry * hy * hy / (2.0 * b * b)
    S = (
        (1.0 - 2.0 * ry) * (1.0 + chx) * rx + cx2,
        (1.0 - 2.0 * ry) * (1.0 - chx) * rx + cx2,
        (1.0 - 2.0 * rx) * (1.0 + dhy) * ry + dy2,
        (1.0 - 2.0 * rx) * (1.0 - dhy) * ry + dy2,
        (1.0 - 2.0 * rx) * (1.0 - 2.0 * ry) - 2.0 * cx2 - 2.0 * dy2,
        (1.0 + chx) * (1.0 + dhy) * rx * ry,
        (1.0 + chx) * (1.0 - dhy) * rx * ry,
        (1.0 - chx) * (1.0 + dhy) * rx * ry,
        (1.0 - chx) * (1.0 - dhy) * rx * ry,
    )
    return MaxPrincipleCoeffs(S)


def _convection_bound(kappa, r_axis, prod, dims_div):
    if r_axis <= 0.0:
        return 2.0 * kappa
    root = math.sqrt(prod / dims_div) if prod > 0.0 else 0.0
    return kappa * min(2.0, root / r_axis)


def cfl_check_2d(a, b, c, d, grid, heuristic: bool = False) -> CflReport:
    """Corrected-scheme conditions: ratio cap plus two convection bounds."""
    tau, hx, hy = grid.tau, grid.hx, grid.hy
    rx = a * tau / hx**2
    ry = b * tau / hy**2
    prod = (1.0 - 2.0 * rx) * (1.0 - 2.0 * ry)
    conds = (
        CflCondition("max{rx, ry} <= 1/2", max(rx, ry), 0.5),
        CflCondition("|c| hx <= a min{2, sqrt((1-2rx)(1-2ry)/2)/rx}",
                     abs(c) * hx, _convection_bound(a, rx, prod, 2.0)),
        CflCondition("|d| hy <= b min{2, sqrt((1-2rx)(1-2ry)/2)/ry}",
                     abs(d) * hy, _convection_bound(b, ry, prod, 2.0)),
    )
    return CflReport(conds, heuristic=heuristic)


def cfl_check_3d(k1, k2, k3, l1, l2, l3, grid3, heuristic: bool = False) -> CflReport:
    """Corrected 3D conditions: ratio cap 1/4 plus three convection bounds."""
    tau = grid3.tau
    rx = k1 * tau / grid3.hx**2
    ry = k2 * tau / grid3.hy**2
    rz = k3 * tau / grid3.hz**2
    prod = (1.0 - 2.0 * rx) * (1.0 - 2.0 * ry) * (1.0 - 2.0 * rz)
    conds = (
        CflCondition("max{rx, ry, rz} <= 1/4", max(rx, ry, rz), 0.25),
        CflCondition("|l1| hx <= k1 min{2, sqrt((1-2rx)(1-2ry)(1-2rz)/3)/rx}",
                     abs(l1) * grid3.hx, _convection_bound(k1, rx, prod, 3.0)),
        CflCondition("|l2| hy <= k2 min{2, sqrt((1-2rx)(1-2ry)(1-2rz)/3)/ry}",
                     abs(l2) * grid3.hy, _convection_bound(k2, ry, prod, 3.0)),
        CflCondition("|l3| hz <= k3 min{2, sqrt((1-2rx)(1-2ry)(1-2rz)/3)/rz}",
                     abs(l3) * grid3.hz, _convection_bound(k3, rz, prod, 3.0)),
    )
    return CflReport(conds, heuristic=heuristic)


def cfl_corrected(dim: int, ratios) -> CflReport:
    """Ratio-only corrected-scheme diffusion condition (no convection)."""
    ratios = tuple(float(r) for r in ratios)
    if dim == 2:
        if len(ratios) != 2:
            raise ConfigError("2D check needs (rx, ry)")
        return CflReport((CflCondition("max{rx, ry} <= 1/2", max(ratios), 0.5),))
    if dim == 3:
        if len(ratios) != 3:
            raise ConfigError("3D check needs (rx, ry, rz)")
        return CflReport((CflCondition("max{rx, ry, rz} <= 1/4", max(ratios), 0.25),))
    raise ConfigError(f"dim must be 2 or 3, got {dim}")


def cfl_classical(dim: int, ratios) -> CflReport:
    """Classical-scheme condition: the ratios sum to at most 1/2."""
    ratios = tuple(float(r) for r in ratios)
    if dim == 2 and len(ratios) == 2:
        return CflReport((CflCondition("rx + ry <= 1/2", sum(ratios), 0.5),))
    if dim == 3 and len(ratios) == 3:
        return CflReport((CflCondition("rx + ry + rz <= 1/2", sum(ratios), 0.5),))
    raise ConfigError(f"dim/ratio mismatch: dim={dim}, {len(ratios)} ratios")


def cfl_heuristic_varcoef(problem, grid) -> CflReport:
    """Constant-coefficient check at the fields' max |c|, |d| (heuristic only)."""
    X, Y = grid.mesh
    cmax = float(np.abs(problem.c.value(X, Y)).max())
    dmax = float(np.abs(problem.d.value(X, Y)).max())
    return cfl_check_2d(problem.a, problem.b, cmax, dmax, grid, heuristic=True)


def cfl_heuristic_nonlinear(problem, grid, field=None) -> CflReport:
    """Linearized check at the field value of largest magnitude (heuristic only).

    No stability condition is known for the corrected flux/reaction scheme;
    this freezes the fluxes at u* (the current field's max-|u| value) and
    applies the constant-convection conditions with c = -f'(u*), d = -g'(u*).
    """
    if field is None:
        X, Y = grid.mesh
        field = np.asarray(problem.phi(X, Y), dtype=float)
    flat = np.asarray(field).ravel()
    ustar = float(flat[np.argmax(np.abs(flat))])
    ua = np.float64(ustar)
    c = -float(problem.flux_f.d1(ua))
    d = -float(problem.flux_g.d1(ua))
    return cfl_check_2d(problem.a, problem.b, c, d, grid, heuristic=True)

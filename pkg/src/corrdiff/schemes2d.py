"""Time-step kernels and driver for the 2D linear schemes.

Five schemes share one nine-point update kernel; they differ only in which
folded coefficients are nonzero and in the source correction:

  corrected_varcoef     full variable-coefficient update, tau-weighted
                        coefficient corrections, cross and d2*dc terms
  corrected_constcoef   same with constant convection
  corrected_diffusion   diffusion plus the single d2x*d2y cross term
  classical_constcoef   forward Euler + central differences, plain source
  classical_diffusion   forward Euler diffusion, plain source

Boundary values are injected from the Dirichlet data at the new time level
after each interior update.  Divergence (max |u| beyond 1e100, or NaN) sets
a flag and stops the run; it is reported, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import kernels
from ._evaluate import (DirichletEdges2, make_corrected_source_eval,
                        make_err_tracker, make_source_pair_eval)
from .errors import ConfigError
from .grid import Grid2
from .problems import LinearProblem2

DIVERGE_LIMIT = 1e100


class SchemeKind2(str, Enum):
    CORRECTED_VARCOEF = "corrected_varcoef"
    CORRECTED_DIFFUSION = "corrected_diffusion"
    CORRECTED_CONSTCOEF = "corrected_constcoef"
    CLASSICAL_DIFFUSION = "classical_diffusion"
    CLASSICAL_CONSTCOEF = "classical_constcoef"

    @property
    def is_corrected(self) -> bool:
        return self.value.startswith("corrected")


class SourceCorrection(str, Enum):
    """Which tau/2 correction the discrete source carries."""

    VARIABLE = "variable"    # diffusion + variable-convection + time terms
    DIFFUSION = "diffusion"  # diffusion + time terms only
    CONSTANT = "constant"    # diffusion + constant-convection + time terms
    NONE = "none"            # plain f

    @staticmethod
    def for_scheme(scheme: SchemeKind2) -> "SourceCorrection":
        return {
            SchemeKind2.CORRECTED_VARCOEF: SourceCorrection.VARIABLE,
            SchemeKind2.CORRECTED_DIFFUSION: SourceCorrection.DIFFUSION,
            SchemeKind2.CORRECTED_CONSTCOEF: SourceCorrection.CONSTANT,
            SchemeKind2.CLASSICAL_DIFFUSION: SourceCorrection.NONE,
            SchemeKind2.CLASSICAL_CONSTCOEF: SourceCorrection.NONE,
        }[scheme]


def _const_value(cf, grid) -> float:
    return float(np.asarray(cf.value(np.float64(grid.L1), np.float64(grid.L2))))


def source_term(problem: LinearProblem2, grid: Grid2, mode: SourceCorrection,
                i: int, j: int, k: int) -> float:
    """Reference per-point discrete source value (kernels use the folded form)."""
    if problem.source is None:
        return 0.0
    f = problem.source
    x, y, t = grid.xs[i], grid.ys[j], grid.t(k)
    val = float(f.value(x, y, t))
    if mode is SourceCorrection.NONE:
        return val
    f.require("dxx", "dyy", "dt")
    half = 0.5 * grid.tau
    corr = problem.a * float(f.dxx(x, y, t)) + problem.b * float(f.dyy(x, y, t)) \
        + float(f.dt(x, y, t))
    if mode is not SourceCorrection.DIFFUSION:
        f.require("dx", "dy")
        cv = _const_value(problem.c, grid) if mode is SourceCorrection.CONSTANT \
            else float(problem.c.value(x, y))
        dv = _const_value(problem.d, grid) if mode is SourceCorrection.CONSTANT \
            else float(problem.d.value(x, y))
        corr += cv * float(f.dx(x, y, t)) + dv * float(f.dy(x, y, t))
    return val + half * corr


class Stepper2D:
    """Double-buffered one-step advancer for a linear 2D problem."""

    def __init__(self, problem: LinearProblem2, grid: Grid2, scheme: SchemeKind2,
                 u0: Optional[np.ndarray] = None, k0: int = 0):
        scheme = SchemeKind2(scheme)
        self.problem = problem
        self.grid = grid
        self.scheme = scheme
        self.mode = SourceCorrection.for_scheme(scheme)
        self._build_coeffs()
        self._build_source_eval()
        self.edges = DirichletEdges2(grid, problem.alpha)

        X, Y = grid.mesh
        if u0 is None:
            self.u = np.asarray(problem.phi(X, Y), dtype=float).copy()
        else:
            self.u = np.array(u0, dtype=float, copy=True)
        if self.u.shape != grid.shape:
            raise ConfigError(f"field shape {self.u.shape} != grid shape {grid.shape}")
        self.work = np.empty_like(self.u)
        self.k = k0
        self.last_max = kernels.max_abs(self.u)

    def _build_coeffs(self):
        p, g = self.problem, self.grid
        a, b, tau, hx, hy = p.a, p.b, g.tau, g.hx, g.hy
        scheme = self.scheme

        if scheme is SchemeKind2.CORRECTED_VARCOEF:
            p.c.require("dx", "dy", "dxx", "dyy")
            p.d.require("dx", "dy", "dxx", "dyy")
            X, Y = g.mesh
            C, D = p.c.value(X, Y), p.d.value(X, Y)
            Cx, Cy = p.c.dx(X, Y), p.c.dy(X, Y)
            Cxx, Cyy = p.c.dxx(X, Y), p.c.dyy(X, Y)
            Dx, Dy = p.d.dx(X, Y), p.d.dy(X, Y)
            Dxx, Dyy = p.d.dxx(X, Y), p.d.dyy(X, Y)
            half = 0.5 * tau
            arr = lambda v: np.ascontiguousarray(v, dtype=float)
            self.coeffs = (
                arr((tau / hx**2) * (a + half * (2.0 * a * Cx + C * C))),
                arr((tau / hy**2) * (b + half * (2.0 * b * Dy + D * D))),
                arr((tau / (2.0 * hx)) * (C + half * (a * Cxx + b * Cyy + C * Cx + Cy * D))),
                arr((tau / (2.0 * hy)) * (D + half * (a * Dxx + b * Dyy + C * Dx + D * Dy))),
                arr((tau / (4.0 * hx * hy)) * (half * (2.0 * a * Dx + 2.0 * b * Cy + 2.0 * C * D))),
                tau * tau * a * b / (hx**2 * hy**2),
                arr((tau * tau * a / (2.0 * hx**2 * hy)) * D),
                arr((tau * tau * b / (2.0 * hy**2 * hx)) * C),
            )
            self._cvals, self._dvals = C, D
            return

        if not p.has_constant_convection:
            raise ConfigError(
                f"scheme '{scheme.value}' needs constant convection coefficients; "
                "use corrected_varcoef")
        c0, d0 = _const_value(p.c, g), _const_value(p.d, g)
        self._cvals, self._dvals = c0, d0
        if scheme in (SchemeKind2.CORRECTED_DIFFUSION, SchemeKind2.CLASSICAL_DIFFUSION) \
                and (c0 != 0.0 or d0 != 0.0):
            raise ConfigError(
                f"scheme '{scheme.value}' requires c = d = 0, got c={c0}, d={d0}")

        if scheme is SchemeKind2.CORRECTED_CONSTCOEF:
            self.coeffs = (
                (tau / hx**2) * (a + 0.5 * tau * c0 * c0),
                (tau / hy**2) * (b + 0.5 * tau * d0 * d0),
                (tau / (2.0 * hx)) * c0,
                (tau / (2.0 * hy)) * d0,
                (tau / (4.0 * hx * hy)) * (tau * c0 * d0),
                tau * tau * a * b / (hx**2 * hy**2),
                tau * tau * a * d0 / (2.0 * hx**2 * hy),
                tau * tau * b * c0 / (2.0 * hy**2 * hx),
            )
        elif scheme is SchemeKind2.CORRECTED_DIFFUSION:
            self.coeffs = (tau * a / hx**2, tau * b / hy**2, 0.0, 0.0, 0.0,
                           tau * tau * a * b / (hx**2 * hy**2), 0.0, 0.0)
        elif scheme is SchemeKind2.CLASSICAL_CONSTCOEF:
            self.coeffs = (tau * a / hx**2, tau * b / hy**2,
                           tau * c0 / (2.0 * hx), tau * d0 / (2.0 * hy),
                           0.0, 0.0, 0.0, 0.0)
        else:  # CLASSICAL_DIFFUSION
            self.coeffs = (tau * a / hx**2, tau * b / hy**2,
                           0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def _build_source_eval(self):
        p, g = self.problem, self.grid
        if p.source is None:
            self.source_eval = None
            return
        X, Y = g.mesh
        if self.mode is SourceCorrection.NONE:
            self.source_eval = make_source_pair_eval(p.source, X, Y, scale=g.tau)
            return
        p.source.require("dxx", "dyy", "dt")
        diff_terms = [(p.a, "dxx"), (p.b, "dyy"), (1.0, "dt")]
        conv_x = conv_y = None
        if self.mode is not SourceCorrection.DIFFUSION:
            p.source.require("dx", "dy")
            conv_x, conv_y = self._cvals, self._dvals
        self.source_eval = make_corrected_source_eval(
            p.source, g.tau, diff_terms, conv_x, conv_y, X, Y, scale=g.tau)

    def step(self) -> float:
        """Advance one level; returns max |interior| of the new level."""
        g = self.grid
        if self.source_eval is not None:
            src, scale = self.source_eval(g.t(self.k))
        else:
            src, scale = None, 1.0
        m = kernels.linear2d_step(self.work, self.u, *self.coeffs, src, scale)
        self.edges.fill(self.work, g.t(self.k + 1))
        self.u, self.work = self.work, self.u
        self.k += 1
        self.last_max = m
        return m


@dataclass
class SolveResult:
    """Final field plus divergence flag and error statistics (if exact known).

    ``final_err`` is the sup over space at the last level reached — the
    statistic the bundled reference tables use; ``max_err`` is the running
    sup over every level.
    """

    u: np.ndarray
    diverged: bool
    max_err: Optional[float]
    final_err: Optional[float]
    levels_run: int


def _lift_nan(e: float) -> float:
    return float("inf") if math.isnan(e) else e


def _drive(stepper, grid, err_fn, on_level: Optional[Callable],
           err_stop: Optional[float] = None) -> SolveResult:
    err = last = None
    if err_fn is not None:
        err = last = _lift_nan(err_fn(stepper.u, 0.0))
    if on_level is not None:
        on_level(0, stepper.u)
    diverged = False
    for _ in range(grid.n):
        m = stepper.step()
        if err_fn is not None:
            last = _lift_nan(err_fn(stepper.u, grid.t(stepper.k)))
            if last > err:
                err = last
        if on_level is not None:
            on_level(stepper.k, stepper.u)
        if not (m <= DIVERGE_LIMIT):
            diverged = True
            break
        if err_stop is not None and err is not None and err > err_stop:
            break
    return SolveResult(stepper.u, diverged, err, last, stepper.k)


def solve2(problem: LinearProblem2, grid: Grid2, scheme: SchemeKind2,
           on_level: Optional[Callable] = None,
           err_stop: Optional[float] = None) -> SolveResult:
    """Run all n steps from u0 = phi; tracks sup error over every level.

    err_stop, if given, ends the run once the running sup error exceeds it
    (divergence-onset detection; the result then covers only the levels run).
    """
    stepper = Stepper2D(problem, grid, scheme)
    err_fn = None
    if problem.exact is not None:
        X, Y = grid.mesh
        err_fn = make_err_tracker(problem.exact, X, Y)
    return _drive(stepper, grid, err_fn, on_level, err_stop=err_stop)


def _one_step(problem, grid, scheme, uk, k):
    st = Stepper2D(problem, grid, scheme, u0=uk, k0=k)
    st.step()
    return st.u


def step_corrected_varcoef(uk, problem, grid, k=0):
    return _one_step(problem, grid, SchemeKind2.CORRECTED_VARCOEF, uk, k)


def step_corrected_constcoef(uk, problem, grid, k=0):
    return _one_step(problem, grid, SchemeKind2.CORRECTED_CONSTCOEF, uk, k)


def step_corrected_diffusion(uk, problem, grid, k=0):
    return _one_step(problem, grid, SchemeKind2.CORRECTED_DIFFUSION, uk, k)


def step_classical(uk, problem, grid, k=0):
    scheme = SchemeKind2.CLASSICAL_DIFFUSION
    if problem.has_constant_convection and (
            _const_value(problem.c, grid) != 0.0 or _const_value(problem.d, grid) != 0.0):
        scheme = SchemeKind2.CLASSICAL_CONSTCOEF
    return _one_step(problem, grid, scheme, uk, k)

"""3D diffusion schemes: corrected, classical, and a convection extension.

The corrected scheme adds the three pairwise tau * ki * kj cross-composite
terms to forward Euler and carries the tau/2 source correction.  The
classical baseline drops the cross terms and uses the plain source (that is
what the bundled reference tables were generated with).  The convection
extension (constant wind) is built by analogy with the 2D
constant-coefficient scheme — coefficient corrections ki + tau*li^2/2,
centered convection, all pairwise composites — and is flagged as an
extension: it makes the convection branch of the 3D CFL check exercisable
end-to-end but has no reference table.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import kernels
from ._evaluate import (DirichletFaces3, make_corrected_source_eval,
                        make_err_tracker, make_source_pair_eval)
from .errors import ConfigError
from .grid import Grid3
from .problems import LinearProblem3
from .schemes2d import SolveResult, _drive


class SchemeKind3(str, Enum):
    CORRECTED = "corrected_3d"
    CLASSICAL = "classical_3d"
    CORRECTED_CONVECTION = "corrected_3d_convection"


class Stepper3D:
    """Double-buffered advancer for a constant-coefficient 3D problem."""

    def __init__(self, problem: LinearProblem3, grid: Grid3, scheme: SchemeKind3,
                 u0: Optional[np.ndarray] = None, k0: int = 0):
        scheme = SchemeKind3(scheme)
        self.problem = problem
        self.grid = grid
        self.scheme = scheme
        p, g = problem, grid
        tau = g.tau
        self.k2 = (tau * p.k1 / g.hx**2, tau * p.k2 / g.hy**2, tau * p.k3 / g.hz**2)

        has_wind = (p.l1, p.l2, p.l3) != (0.0, 0.0, 0.0)
        if scheme is not SchemeKind3.CORRECTED_CONVECTION and has_wind:
            raise ConfigError(
                f"scheme '{scheme.value}' handles no convection; "
                "use corrected_3d_convection")

        if scheme is SchemeKind3.CLASSICAL:
            self.cross = (0.0, 0.0, 0.0)
        else:
            self.cross = (tau * tau * p.k1 * p.k2 / (g.hx**2 * g.hy**2),
                          tau * tau * p.k2 * p.k3 / (g.hy**2 * g.hz**2),
                          tau * tau * p.k1 * p.k3 / (g.hx**2 * g.hz**2))

        self.full = scheme is SchemeKind3.CORRECTED_CONVECTION
        if self.full:
            self.k2 = (tau * (p.k1 + 0.5 * tau * p.l1**2) / g.hx**2,
                       tau * (p.k2 + 0.5 * tau * p.l2**2) / g.hy**2,
                       tau * (p.k3 + 0.5 * tau * p.l3**2) / g.hz**2)
            self.k1 = (tau * p.l1 / (2.0 * g.hx),
                       tau * p.l2 / (2.0 * g.hy),
                       tau * p.l3 / (2.0 * g.hz))
            self.mixed = (tau * tau * p.l1 * p.l2 / (4.0 * g.hx * g.hy),
                          tau * tau * p.l2 * p.l3 / (4.0 * g.hy * g.hz),
                          tau * tau * p.l1 * p.l3 / (4.0 * g.hx * g.hz))
            # d2(axis i) * dc(axis j) coefficients: tau^2 ki lj / (2 hi^2 hj)
            self.d2dc = (tau * tau * p.k1 * p.l2 / (2.0 * g.hx**2 * g.hy),
                         tau * tau * p.k2 * p.l1 / (2.0 * g.hy**2 * g.hx),
                         tau * tau * p.k1 * p.l3 / (2.0 * g.hx**2 * g.hz),
                         tau * tau * p.k3 * p.l1 / (2.0 * g.hz**2 * g.hx),
                         tau * tau * p.k2 * p.l3 / (2.0 * g.hy**2 * g.hz),
                         tau * tau * p.k3 * p.l2 / (2.0 * g.hz**2 * g.hy))

        self._build_source_eval()
        self.faces = DirichletFaces3(grid, problem.alpha)

        X, Y, Z = grid.mesh
        if u0 is None:
            self.u = np.asarray(problem.phi(X, Y, Z), dtype=float).copy()
        else:
            self.u = np.array(u0, dtype=float, copy=True)
        if self.u.shape != grid.shape:
            raise ConfigError(f"field shape {self.u.shape} != grid shape {grid.shape}")
        self.work = np.empty_like(self.u)
        self.k = k0
        self.last_max = kernels.max_abs(self.u)

    def _build_source_eval(self):
        p, g = self.problem, self.grid
        if p.source is None:
            self.source_eval = None
            return
        X, Y, Z = g.mesh
        if self.scheme is SchemeKind3.CLASSICAL:
            self.source_eval = make_source_pair_eval(p.source, X, Y, Z, scale=g.tau)
            return
        p.source.require("dxx", "dyy", "dzz", "dt")
        diff_terms = [(p.k1, "dxx"), (p.k2, "dyy"), (p.k3, "dzz"), (1.0, "dt")]
        conv_x = conv_y = conv_z = None
        if self.scheme is SchemeKind3.CORRECTED_CONVECTION:
            p.source.require("dx", "dy", "dz")
            conv_x, conv_y, conv_z = p.l1, p.l2, p.l3
        self.source_eval = make_corrected_source_eval(
            p.source, g.tau, diff_terms, conv_x, conv_y, X, Y, Z, conv_z,
            scale=g.tau)

    def step(self) -> float:
        g = self.grid
        if self.source_eval is not None:
            src, scale = self.source_eval(g.t(self.k))
        else:
            src, scale = None, 1.0
        if self.full:
            m = kernels.linear3d_full_step(
                self.work, self.u, *self.k2, *self.k1, *self.cross, *self.mixed,
                *self.d2dc, src, scale)
        else:
            m = kernels.linear3d_step(self.work, self.u, *self.k2, *self.cross,
                                      src, scale)
        self.faces.fill(self.work, g.t(self.k + 1))
        self.u, self.work = self.work, self.u
        self.k += 1
        self.last_max = m
        return m


def solve3(problem: LinearProblem3, grid: Grid3, scheme: SchemeKind3,
           on_level: Optional[Callable] = None,
           err_stop: Optional[float] = None) -> SolveResult:
    """Run all n steps from u0 = phi; same result contract as solve2."""
    stepper = Stepper3D(problem, grid, scheme)
    err_fn = None
    if problem.exact is not None:
        X, Y, Z = grid.mesh
        err_fn = make_err_tracker(problem.exact, X, Y, Z)
    return _drive(stepper, grid, err_fn, on_level, err_stop=err_stop)


def step_corrected_3d(uk, problem, grid, k=0):
    st = Stepper3D(problem, grid, SchemeKind3.CORRECTED, u0=uk, k0=k)
    st.step()
    return st.u


def step_classical_3d(uk, problem, grid, k=0):
    st = Stepper3D(problem, grid, SchemeKind3.CLASSICAL, u0=uk, k0=k)
    st.step()
    return st.u


def step_corrected_3d_convection(uk, problem, grid, k=0):
    st = Stepper3D(problem, grid, SchemeKind3.CORRECTED_CONVECTION, u0=uk, k0=k)
    st.step()
    return st.u

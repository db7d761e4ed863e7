"""Corrected explicit scheme for 2D flux/reaction problems, plus a baseline.

The corrected update carries every tau-weighted term produced by trading
the u_tt truncation term for spatial derivatives through the equation:
flux-dependent diffusion/convection coefficient corrections, the cross and
d2*dc composites, the squared-gradient brackets, and the reaction coupling.
The classical baseline is plain forward Euler with central differences.

Flux derivatives to third order and reaction derivatives to second order
are required at solver construction.  No stability theory exists for this
scheme; ``corrdiff.stability.cfl_heuristic_nonlinear`` gives a clearly
labeled linearized check.
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from . import kernels
from ._evaluate import DirichletEdges2, make_err_tracker
from .errors import ConfigError
from .grid import Grid2
from .neumann import _require_closure_room, neumann_sweep
from .problems import NEUMANN, NonlinearProblem2
from .schemes2d import SolveResult, _drive


class NonlinearStepper2D:
    """Double-buffered advancer for a flux/reaction problem."""

    def __init__(self, problem: NonlinearProblem2, grid: Grid2,
                 corrected: bool = True, u0: Optional[np.ndarray] = None, k0: int = 0):
        self.problem = problem
        self.grid = grid
        self.corrected = corrected
        problem.flux_f.require(3 if corrected else 1)
        problem.flux_g.require(3 if corrected else 1)
        problem.reaction.require(2 if corrected else 0)
        if problem.boundary == NEUMANN:
            _require_closure_room(grid)
            self.edges = None
        else:
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

    def _arrays(self, u):
        p = self.problem
        arr = lambda fn: np.ascontiguousarray(fn(u), dtype=float)
        if self.corrected:
            return (arr(p.flux_f.d1), arr(p.flux_f.d2), arr(p.flux_f.d3),
                    arr(p.flux_g.d1), arr(p.flux_g.d2), arr(p.flux_g.d3),
                    arr(p.reaction.value), arr(p.reaction.d1), arr(p.reaction.d2))
        return (arr(p.flux_f.d1), arr(p.flux_g.d1), arr(p.reaction.value))

    def step(self) -> float:
        p, g = self.problem, self.grid
        if self.corrected:
            m = kernels.nonlinear2d_step(
                self.work, self.u, p.a, p.b, g.tau, g.hx, g.hy, *self._arrays(self.u))
        else:
            m = kernels.nonlinear2d_classical_step(
                self.work, self.u, p.a, p.b, g.tau, g.hx, g.hy, *self._arrays(self.u))
        t1 = g.t(self.k + 1)
        if self.edges is not None:
            self.edges.fill(self.work, t1)
        else:
            neumann_sweep(self.work, g, p.neumann, t1)
        self.u, self.work = self.work, self.u
        self.k += 1
        self.last_max = m
        return m


def solve_nonlinear(problem: NonlinearProblem2, grid: Grid2,
                    corrected: bool = True,
                    on_level: Optional[Callable] = None,
                    err_stop: Optional[float] = None) -> SolveResult:
    """Run all n steps from u0 = phi under the problem's boundary mode."""
    stepper = NonlinearStepper2D(problem, grid, corrected=corrected)
    err_fn = None
    if problem.exact is not None:
        X, Y = grid.mesh
        err_fn = make_err_tracker(problem.exact, X, Y)
    return _drive(stepper, grid, err_fn, on_level, err_stop=err_stop)


def step_nonlinear(uk, problem, grid, k=0):
    st = NonlinearStepper2D(problem, grid, corrected=True, u0=uk, k0=k)
    st.step()
    return st.u


def step_nonlinear_classical(uk, problem, grid, k=0):
    st = NonlinearStepper2D(problem, grid, corrected=False, u0=uk, k0=k)
    st.step()
    return st.u

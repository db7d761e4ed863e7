"""Refinement studies: sup errors and observed orders, CSV output, field dumps.

A study runs a list of (m1, m2[, m3]) rows.  The time step per row comes
either from an explicit n (tau = T/n) or from a fixed step ratio
(tau = ratio*hx^2/a, n = round(T/tau) — the stored final time is then
n*tau).  Errors are the sup over space at the final level:

  exact mode     against the problem's exact solution;
  two_grid mode  against the row's own fine companion run at exactly
                 (2*m, tau/4, 4n), compared at coincident points (2i, 2j, 4k).

The observed order between consecutive rows is log2(E_prev / E_this);
diverged rows keep their overflow value and produce the large-negative
order artifact rather than raising.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .errors import ConfigError
from .grid import Grid2, Grid3, build_grid2, build_grid3, grid2_from_ratio, grid3_from_ratio
from .nonlinear2d import NonlinearStepper2D, solve_nonlinear
from .problems import LinearProblem2, LinearProblem3, NonlinearProblem2
from .schemes2d import DIVERGE_LIMIT, SchemeKind2, SolveResult, Stepper2D, solve2
from .schemes3d import SchemeKind3, Stepper3D, solve3

NONLINEAR_SCHEMES = ("nonlinear", "nonlinear_classical")


def is_3d(problem) -> bool:
    return isinstance(problem, LinearProblem3)


def make_grid(problem, ms: Sequence[int], n: Optional[int] = None,
              ratio: Optional[float] = None, T: float = 1.0):
    """Grid over the problem's domain; time step from n or from ratio."""
    if is_3d(problem):
        m1, m2, m3 = ms
        args = (problem.L1, problem.R1, problem.L2, problem.R2,
                problem.L3, problem.R3, T, m1, m2, m3)
        coeffs = (problem.k1, problem.k2, problem.k3)
        if n is not None:
            return build_grid3(*args[:10], n, *coeffs)
        return grid3_from_ratio(*args, ratio, *coeffs)
    m1, m2 = ms
    args = (problem.L1, problem.R1, problem.L2, problem.R2, T, m1, m2)
    if n is not None:
        return build_grid2(*args, n, problem.a, problem.b)
    return grid2_from_ratio(*args, ratio, problem.a, problem.b)


def refine_grid(grid):
    """The exact two-grid companion: m -> 2m, h -> h/2, tau -> tau/4, n -> 4n."""
    if isinstance(grid, Grid3):
        return Grid3(grid.L1, grid.R1, grid.L2, grid.R2, grid.L3, grid.R3,
                     grid.T, 2 * grid.m1, 2 * grid.m2, 2 * grid.m3, 4 * grid.n,
                     grid.hx / 2, grid.hy / 2, grid.hz / 2, grid.tau / 4,
                     grid.a, grid.b, grid.c, grid.rx, grid.ry, grid.rz)
    return Grid2(grid.L1, grid.R1, grid.L2, grid.R2, grid.T,
                 2 * grid.m1, 2 * grid.m2, 4 * grid.n,
                 grid.hx / 2, grid.hy / 2, grid.tau / 4,
                 grid.a, grid.b, grid.rx, grid.ry)


def make_stepper(problem, grid, scheme: str):
    if isinstance(problem, NonlinearProblem2):
        if scheme not in NONLINEAR_SCHEMES:
            raise ConfigError(f"scheme '{scheme}' does not apply to nonlinear problems")
        return NonlinearStepper2D(problem, grid, corrected=(scheme == "nonlinear"))
    if isinstance(problem, LinearProblem3):
        return Stepper3D(problem, grid, SchemeKind3(scheme))
    if isinstance(problem, LinearProblem2):
        return Stepper2D(problem, grid, SchemeKind2(scheme))
    raise ConfigError(f"unsupported problem type {type(problem).__name__}")


def run_single(problem, grid, scheme: str, on_level: Optional[Callable] = None,
               err_stop: Optional[float] = None) -> SolveResult:
    """One solve; dispatches on problem type."""
    if isinstance(problem, NonlinearProblem2):
        if scheme not in NONLINEAR_SCHEMES:
            raise ConfigError(f"scheme '{scheme}' does not apply to nonlinear problems")
        return solve_nonlinear(problem, grid, corrected=(scheme == "nonlinear"),
                               on_level=on_level, err_stop=err_stop)
    if isinstance(problem, LinearProblem3):
        return solve3(problem, grid, SchemeKind3(scheme), on_level=on_level,
                      err_stop=err_stop)
    return solve2(problem, grid, SchemeKind2(scheme), on_level=on_level,
                  err_stop=err_stop)


def _restrict(u):
    return u[::2, ::2] if u.ndim == 2 else u[::2, ::2, ::2]


@dataclass
class TwoGridResult:
    final_err: float
    max_err: float
    diverged: bool


def run_two_grid(problem, grid, scheme: str,
                 err_stop: Optional[float] = None) -> TwoGridResult:
    """Coarse run vs its own fine companion, compared at every coarse level.

    err_stop, if given, ends the run early once the running sup error
    exceeds it (used only for divergence-onset detection).
    """
    fine = refine_grid(grid)
    sc = make_stepper(problem, grid, scheme)
    sf = make_stepper(problem, fine, scheme)
    last = kernels.max_abs_diff(sc.u, np.ascontiguousarray(_restrict(sf.u)))
    sup = last
    diverged = False
    for _ in range(grid.n):
        mc = sc.step()
        mf = 0.0
        for _ in range(4):
            mf = sf.step()
        last = kernels.max_abs_diff(sc.u, np.ascontiguousarray(_restrict(sf.u)))
        if math.isnan(last):
            last = float("inf")
        if last > sup:
            sup = last
        if not (mc <= DIVERGE_LIMIT) or not (mf <= DIVERGE_LIMIT):
            diverged = True
            break
        if err_stop is not None and sup > err_stop:
            break
    return TwoGridResult(last, sup, diverged)


@dataclass
class StudyRow:
    m1: int
    m2: int
    m3: Optional[int]
    n: int
    e_inf: float
    ord: Optional[float] = None
    diverged: bool = False


@dataclass
class StudySpec:
    """One refinement study: which problem/scheme, which rows, how to measure."""

    problem: object
    scheme: str
    rows: Sequence
    T: float = 1.0
    ratio: Optional[float] = None
    mode: str = "exact"       # 'exact' | 'two_grid'
    err_stop: Optional[float] = None

    def normalized_rows(self) -> List[Tuple[Tuple[int, ...], Optional[int]]]:
        dim = 3 if is_3d(self.problem) else 2
        out = []
        for row in self.rows:
            row = tuple(int(v) for v in row)
            if len(row) == dim:
                ms, n = row, None
            elif len(row) == dim + 1:
                ms, n = row[:dim], row[dim]
            else:
                raise ConfigError(f"row {row} does not fit a {dim}D study")
            if n is None and self.ratio is None:
                raise ConfigError(f"row {row} has no n and the study has no ratio")
            out.append((ms, n))
        return out

    def validate(self) -> None:
        rows = self.normalized_rows()
        if not rows:
            raise ConfigError("study has no rows")
        if self.mode not in ("exact", "two_grid"):
            raise ConfigError(f"unknown error mode '{self.mode}'")
        if self.mode == "exact" and getattr(self.problem, "exact", None) is None:
            raise ConfigError("exact error mode needs a problem with an exact solution")
        if self.mode == "two_grid":
            for (ms_a, _), (ms_b, _) in zip(rows, rows[1:]):
                if tuple(2 * m for m in ms_a) != ms_b:
                    raise ConfigError(
                        f"two-grid rows must double every m: {ms_a} -> {ms_b}")


@dataclass
class StudyReport:
    rows: List[StudyRow]
    meta: dict = field(default_factory=dict)


def run_study(spec: StudySpec) -> StudyReport:
    spec.validate()
    rows: List[StudyRow] = []
    for ms, n in spec.normalized_rows():
        grid = make_grid(spec.problem, ms, n=n, ratio=spec.ratio, T=spec.T)
        if spec.mode == "two_grid":
            res = run_two_grid(spec.problem, grid, spec.scheme,
                               err_stop=spec.err_stop)
            e, diverged = res.final_err, res.diverged
        else:
            out = run_single(spec.problem, grid, spec.scheme)
            e, diverged = out.final_err, out.diverged
        m3 = grid.m3 if isinstance(grid, Grid3) else None
        rows.append(StudyRow(grid.m1, grid.m2, m3, grid.n, e, diverged=diverged))
    attach_orders(rows)
    meta = {"problem": getattr(spec.problem, "name", "?"), "scheme": spec.scheme,
            "mode": spec.mode, "ratio": spec.ratio, "T": spec.T}
    return StudyReport(rows, meta)


def attach_orders(rows: List[StudyRow]) -> None:
    """ord_i = log2(E_{i-1}/E_i); first row keeps None (the tables' '*')."""
    for prev, cur in zip(rows, rows[1:]):
        cur.ord = observed_order(prev.e_inf, cur.e_inf)


def observed_order(e_prev: float, e_cur: float) -> float:
    if math.isnan(e_prev) or math.isnan(e_cur):
        return float("nan")
    if math.isinf(e_cur):
        return float("nan") if math.isinf(e_prev) else float("-inf")
    if math.isinf(e_prev):
        return float("inf")
    if e_prev <= 0.0 or e_cur <= 0.0:
        return float("nan")
    return math.log2(e_prev / e_cur)


# ----------------------------------------------------------------------
# CSV and field dumps

CSV_HEADER = "m1,m2,m3,n,E_inf,ord"


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_csv(report: StudyReport, path: str) -> str:
    lines = [CSV_HEADER]
    for r in report.rows:
        m3 = "" if r.m3 is None else str(r.m3)
        order = "" if r.ord is None else format_order(r.ord)
        lines.append(f"{r.m1},{r.m2},{m3},{r.n},{r.e_inf:.6e},{order}")
    _atomic_write(path, "\n".join(lines) + "\n")
    return path


def format_order(v: float) -> str:
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.4f}"


def parse_csv(path: str) -> List[StudyRow]:
    rows = []
    with open(path) as f:
        header = f.readline().strip()
        if header != CSV_HEADER:
            raise ConfigError(f"unexpected CSV header: {header!r}")
        for line in f:
            line = line.strip()
            if not line:
                continue
            m1, m2, m3, n, e, order = line.split(",")
            rows.append(StudyRow(
                int(m1), int(m2), int(m3) if m3 else None, int(n), float(e),
                float(order) if order else None))
    return rows


def snapshot_fields(problem, grid, scheme: str, times: Sequence[float],
                    outdir: str, prefix: str = "field"):
    """One plain-text field dump per requested time (nearest level).

    First line: '# nx ny [nz] x0 y0 [z0] hx hy [hz] t'; then one value per
    line in layout order (x fastest).  Returns (paths, solve result).
    """
    level_of = {}
    for idx, t in enumerate(times):
        k = min(max(int(round(t / grid.tau)), 0), grid.n)
        level_of.setdefault(k, []).append(idx)
    paths: List[Optional[str]] = [None] * len(times)

    three_d = isinstance(grid, Grid3)

    def dump(k, u):
        if k not in level_of:
            return
        t_k = grid.t(k)
        if three_d:
            head = (f"# {grid.m1 + 1} {grid.m2 + 1} {grid.m3 + 1} "
                    f"{grid.L1:.17g} {grid.L2:.17g} {grid.L3:.17g} "
                    f"{grid.hx:.17g} {grid.hy:.17g} {grid.hz:.17g} {t_k:.17g}")
        else:
            head = (f"# {grid.m1 + 1} {grid.m2 + 1} "
                    f"{grid.L1:.17g} {grid.L2:.17g} "
                    f"{grid.hx:.17g} {grid.hy:.17g} {t_k:.17g}")
        body = "\n".join(f"{v:.17g}" for v in u.ravel())
        for idx in level_of[k]:
            path = os.path.join(outdir, f"{prefix}_{idx:03d}.txt")
            _atomic_write(path, head + "\n" + body + "\n")
            paths[idx] = path

    result = run_single(problem, grid, scheme, on_level=dump)
    return [p for p in paths if p is not None], result


def read_snapshot(path: str):
    """(header floats, value array) from a field dump."""
    with open(path) as f:
        head = f.readline().strip()
        if not head.startswith("# "):
            raise ConfigError(f"not a field dump: {path}")
        meta = [float(v) for v in head[2:].split()]
        values = np.array([float(line) for line in f if line.strip()])
    return meta, values

"""Command-line front end.

Subcommands:
  solve CONFIG    one run; prints errors when the exact solution is known,
                  writes requested field snapshots
  study CONFIG    refinement study; writes a CSV of (m, n, E_inf, ord) rows
  cfl CONFIG      stability check for the configured scheme and grid
  tables IDS      re-run bundled verification tables (t1..t12 or 'all')

Configuration files are flat UTF-8 'key = value' lines with dotted section
prefixes ('#' comments allowed); unknown keys are rejected.  See the README
for the schema.  Exit codes: 0 success/pass, 1 configuration error,
2 CFL failure or --check mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import problems as pb
from .errors import ConfigError
from .grid import build_grid2, build_grid3, grid2_from_ratio, grid3_from_ratio
from .harness import (StudySpec, emit_csv, is_3d, run_single, run_study,
                      snapshot_fields)
from .stability import (cfl_check_2d, cfl_check_3d, cfl_classical,
                        cfl_heuristic_nonlinear, cfl_heuristic_varcoef)
from .tables import emit_table_csvs, render_block, run_table, table_ids

LINEAR2_SCHEMES = ("corrected_varcoef", "corrected_diffusion", "corrected_constcoef",
                   "classical_diffusion", "classical_constcoef")
NONLINEAR_SCHEMES = ("nonlinear", "nonlinear_classical")
LINEAR3_SCHEMES = ("corrected_3d", "classical_3d", "corrected_3d_convection")
ALL_SCHEMES = LINEAR2_SCHEMES + NONLINEAR_SCHEMES + LINEAR3_SCHEMES


def parse_config(path: str) -> dict:
    doc = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            key = key.strip()
            if not key:
                raise ConfigError(f"{path}:{lineno}: empty key")
            if key in doc:
                raise ConfigError(f"{path}:{lineno}: duplicate key '{key}'")
            doc[key] = value.strip()
    return doc


def _number(doc, key, default=None, required=False):
    if key not in doc:
        if required:
            raise ConfigError(f"missing required key '{key}'")
        return default
    raw = doc.pop(key)
    try:
        if "/" in raw:
            return float(Fraction(raw))
        return float(raw)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"key '{key}': cannot parse number from '{raw}'") from None


def _integer(doc, key, default=None, required=False):
    v = _number(doc, key, default=default, required=required)
    if v is None:
        return None
    if v != int(v):
        raise ConfigError(f"key '{key}': expected an integer, got {v}")
    return int(v)


def _string(doc, key, default=None, required=False, choices=None):
    if key not in doc:
        if required:
            raise ConfigError(f"missing required key '{key}'")
        return default
    v = doc.pop(key)
    if choices is not None and v not in choices:
        raise ConfigError(f"key '{key}': '{v}' not one of {', '.join(choices)}")
    return v


_PROBLEM_BUILDERS = {
    "zero2d": lambda d: pb.zero2d(
        _number(d, "problem.a", default=1.0), _number(d, "problem.b", default=1.0)),
    "diffusion2d": lambda d: pb.diffusion2d_exp(
        _number(d, "problem.a", required=True), _number(d, "problem.b", required=True)),
    "convection2d": lambda d: pb.convection2d_exp(
        _number(d, "problem.a", required=True), _number(d, "problem.b", required=True),
        _number(d, "problem.c", required=True), _number(d, "problem.d", required=True)),
    "varcoef2d": lambda d: pb.varcoef2d_gaussian(
        _number(d, "problem.a", required=True), _number(d, "problem.b", required=True)),
    "fisher": lambda d: pb.fisher(
        boundary=_string(d, "problem.boundary", default=pb.DIRICHLET,
                         choices=(pb.DIRICHLET, pb.NEUMANN))),
    "chafee_infante": lambda d: pb.chafee_infante(
        boundary=_string(d, "problem.boundary", default=pb.DIRICHLET,
                         choices=(pb.DIRICHLET, pb.NEUMANN))),
    "burgers": lambda d: pb.burgers(
        mu=_number(d, "problem.mu", default=1.0),
        boundary=_string(d, "problem.boundary", default=pb.DIRICHLET,
                         choices=(pb.DIRICHLET, pb.NEUMANN))),
    "kr97_case1": lambda d: pb.kr97_case1(eps=_number(d, "problem.eps", default=0.1)),
    "kr97_case2": lambda d: pb.kr97_case2(eps=_number(d, "problem.eps", default=0.01)),
    "diffusion3d": lambda d: pb.diffusion3d_exp(
        _number(d, "problem.k1", required=True), _number(d, "problem.k2", required=True),
        _number(d, "problem.k3", required=True)),
    "convection3d": lambda d: pb.convection3d_exp(
        _number(d, "problem.k1", required=True), _number(d, "problem.k2", required=True),
        _number(d, "problem.k3", required=True),
        _number(d, "problem.l1", required=True), _number(d, "problem.l2", required=True),
        _number(d, "problem.l3", required=True)),
}


def build_problem(doc: dict):
    name = _string(doc, "problem.name", required=True)
    try:
        builder = _PROBLEM_BUILDERS[name]
    except KeyError:
        raise ConfigError(
            f"key 'problem.name': unknown problem '{name}'; "
            f"know {', '.join(sorted(_PROBLEM_BUILDERS))}") from None
    return builder(doc)


def build_grid(doc: dict, problem, override_ratio=None):
    T = _number(doc, "time.T", default=1.0)
    n = _integer(doc, "time.n")
    ratio = _number(doc, "time.ratio")
    if override_ratio is not None:
        ratio, n = override_ratio, None
    if (n is None) == (ratio is None):
        raise ConfigError("exactly one of 'time.n' and 'time.ratio' is required")
    m1 = _integer(doc, "grid.m1", required=True)
    m2 = _integer(doc, "grid.m2", required=True)
    if is_3d(problem):
        m3 = _integer(doc, "grid.m3", required=True)
        dom = (problem.L1, problem.R1, problem.L2, problem.R2, problem.L3, problem.R3)
        coeffs = (problem.k1, problem.k2, problem.k3)
        if n is not None:
            return build_grid3(*dom, T, m1, m2, m3, n, *coeffs)
        return grid3_from_ratio(*dom, T, m1, m2, m3, ratio, *coeffs)
    if "grid.m3" in doc:
        raise ConfigError("key 'grid.m3' only applies to 3D problems")
    dom = (problem.L1, problem.R1, problem.L2, problem.R2)
    if n is not None:
        return build_grid2(*dom, T, m1, m2, n, problem.a, problem.b)
    return grid2_from_ratio(*dom, T, m1, m2, ratio, problem.a, problem.b)


def _scheme_for(doc, problem, override=None):
    scheme = override or _string(doc, "scheme", required=True)
    if scheme not in ALL_SCHEMES:
        raise ConfigError(f"key 'scheme': unknown scheme '{scheme}'; "
                          f"know {', '.join(ALL_SCHEMES)}")
    return scheme


def _reject_unknown(doc):
    if doc:
        raise ConfigError(f"unknown keys: {', '.join(sorted(doc))}")


def _parse_times(raw: str):
    try:
        return [float(v) for v in raw.replace(",", " ").split()]
    except ValueError:
        raise ConfigError(f"key 'output.snapshots': bad time list '{raw}'") from None


def cmd_solve(args) -> int:
    doc = parse_config(args.config)
    problem = build_problem(doc)
    scheme = _scheme_for(doc, problem, args.scheme)
    grid = build_grid(doc, problem, override_ratio=args.ratio)
    snap_raw = _string(doc, "output.snapshots")
    outdir = args.out or _string(doc, "output.dir", default=".")
    _reject_unknown(doc)

    if snap_raw:
        times = _parse_times(snap_raw)
        paths, res = snapshot_fields(problem, grid, scheme, times, outdir)
        for p in paths:
            print(f"snapshot: {p}")
    else:
        res = run_single(problem, grid, scheme)
    print(f"grid: {grid.m1}x{grid.m2}"
          + (f"x{grid.m3}" if is_3d(problem) else "")
          + f", n={grid.n}, tau={grid.tau:.6g}, rx={grid.rx:.6g}")
    if res.diverged:
        print(f"diverged after {res.levels_run} steps")
    if res.final_err is not None:
        print(f"E_inf(final level) = {res.final_err:.6e}")
        print(f"E_inf(all levels)  = {res.max_err:.6e}")
    return 0


def cmd_study(args) -> int:
    doc = parse_config(args.config)
    problem = build_problem(doc)
    scheme = _scheme_for(doc, problem, args.scheme)
    T = _number(doc, "time.T", default=1.0)
    n0 = _integer(doc, "time.n")
    ratio = args.ratio if args.ratio is not None else _number(doc, "time.ratio")
    if (n0 is None) == (ratio is None):
        raise ConfigError("exactly one of 'time.n' and 'time.ratio' is required")
    m1 = _integer(doc, "grid.m1", required=True)
    m2 = _integer(doc, "grid.m2", required=True)
    ms0 = [m1, m2]
    if is_3d(problem):
        ms0.append(_integer(doc, "grid.m3", required=True))
    levels = _integer(doc, "study.levels", default=4)
    mode = _string(doc, "study.mode", default=None,
                   choices=("exact", "two_grid"))
    if mode is None:
        mode = "exact" if getattr(problem, "exact", None) is not None else "two_grid"
    csv_path = _string(doc, "output.csv", default="study.csv")
    outdir = args.out or _string(doc, "output.dir", default=".")
    _reject_unknown(doc)

    rows = []
    for lev in range(levels):
        ms = tuple(m * 2**lev for m in ms0)
        rows.append(ms if n0 is None else ms + (n0 * 4**lev,))
    spec = StudySpec(problem=problem, scheme=scheme, rows=rows, T=T,
                     ratio=ratio, mode=mode)
    report = run_study(spec)
    path = emit_csv(report, os.path.join(outdir, csv_path))
    for r in report.rows:
        order = "*" if r.ord is None else f"{r.ord:.4f}"
        dims = f"{r.m1}x{r.m2}" + (f"x{r.m3}" if r.m3 else "")
        print(f"{dims:>16s} n={r.n:<8d} E_inf={r.e_inf:.6e} ord={order}")
    print(f"csv: {path}")
    return 0


def cmd_cfl(args) -> int:
    doc = parse_config(args.config)
    problem = build_problem(doc)
    scheme = _scheme_for(doc, problem, args.scheme)
    grid = build_grid(doc, problem, override_ratio=args.ratio)
    _reject_unknown(doc)

    if scheme in NONLINEAR_SCHEMES:
        report = cfl_heuristic_nonlinear(problem, grid)
    elif scheme == "corrected_varcoef" and not problem.has_constant_convection:
        report = cfl_heuristic_varcoef(problem, grid)
    elif scheme in ("classical_diffusion", "classical_constcoef"):
        report = cfl_classical(2, (grid.rx, grid.ry))
    elif scheme == "classical_3d":
        report = cfl_classical(3, (grid.rx, grid.ry, grid.rz))
    elif scheme in LINEAR3_SCHEMES:
        report = cfl_check_3d(problem.k1, problem.k2, problem.k3,
                              problem.l1, problem.l2, problem.l3, grid)
    else:
        from .schemes2d import _const_value
        c0 = _const_value(problem.c, grid) if problem.has_constant_convection else 0.0
        d0 = _const_value(problem.d, grid) if problem.has_constant_convection else 0.0
        report = cfl_check_2d(problem.a, problem.b, c0, d0, grid)
    for line in report.lines():
        print(line)
    print("CFL: " + ("pass" if report.ok else "fail")
          + (" (heuristic)" if report.heuristic else ""))
    return 0 if report.ok else 2


def cmd_tables(args) -> int:
    ids = list(args.ids)
    if not ids or ids == ["all"]:
        ids = table_ids()
    failures = 0
    for tid in ids:
        runs = run_table(tid, max_m=args.max_m, ratio=args.ratio)
        for run in runs:
            print(render_block(run, check=args.check))
            if args.check:
                failures += run.failed
        if args.out:
            for p in emit_table_csvs(runs, args.out):
                print(f"csv: {p}")
    if args.check:
        print(f"check: {'ok' if failures == 0 else f'{failures} mismatches'}")
        return 0 if failures == 0 else 2
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="corrdiff",
        description="Corrected explicit Euler schemes for convection-diffusion",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, config=True):
        if config:
            p.add_argument("config", help="flat key=value configuration file")
        p.add_argument("--scheme", help="override the configured scheme")
        p.add_argument("--ratio", type=_ratio_arg,
                       help="override the step ratio (e.g. 1/6)")
        p.add_argument("--out", help="output directory")

    p_solve = sub.add_parser("solve", help="run one solve")
    add_common(p_solve)
    p_solve.set_defaults(fn=cmd_solve)

    p_study = sub.add_parser("study", help="run a refinement study")
    add_common(p_study)
    p_study.set_defaults(fn=cmd_study)

    p_cfl = sub.add_parser("cfl", help="check the stability conditions")
    add_common(p_cfl)
    p_cfl.set_defaults(fn=cmd_cfl)

    p_tab = sub.add_parser("tables", help="reproduce bundled verification tables")
    p_tab.add_argument("ids", nargs="*", metavar="ID",
                       help=f"table ids ({', '.join(table_ids())}) or 'all'")
    p_tab.add_argument("--max-m", type=int, default=None,
                       help="cap the finest grid (rows with m1 <= max-m)")
    p_tab.add_argument("--check", action="store_true",
                       help="compare against bundled reference values")
    p_tab.add_argument("--ratio", help="only blocks at this ratio label (e.g. 1/6)")
    p_tab.add_argument("--out", help="write per-block CSVs to this directory")
    p_tab.set_defaults(fn=cmd_tables)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _ratio_arg(raw: str) -> float:
    return float(Fraction(raw))


if __name__ == "__main__":
    sys.exit(main())

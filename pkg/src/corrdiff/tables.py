"""Run the bundled verification tables and compare against reference values."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import List, Optional

from .errors import ConfigError
from .harness import StudyReport, StudyRow, StudySpec, emit_csv, run_study
from .reference_tables import (BLOWUP_THRESHOLD, FLOOR_FACTOR, FLOOR_ORD_TOL,
                               ORD_TOL, REL_TOL, TABLES, RefRow)


@dataclass
class RowCheck:
    ref: RefRow
    ours: StudyRow
    policy: str
    e_ok: Optional[bool]    # None = not gated
    ord_ok: Optional[bool]  # None = not gated


@dataclass
class BlockRun:
    table_id: str
    case_label: str
    ratio_label: str
    ratio: float
    report: StudyReport
    checks: List[RowCheck]

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks
                   for ok in (c.e_ok, c.ord_ok) if ok is False)

    @property
    def gated(self) -> int:
        return sum(1 for c in self.checks
                   for ok in (c.e_ok, c.ord_ok) if ok is not None)


def table_ids() -> List[str]:
    return list(TABLES)


def _check_rows(ref_rows, rows) -> List[RowCheck]:
    checks = []
    prev_gateable = False
    for ref, ours in zip(ref_rows, rows):
        policy = ref.policy
        e_ok = ord_ok = None
        if policy == "blowup":
            e_ok = ours.e_inf > BLOWUP_THRESHOLD
        elif policy == "floor":
            e_ok = ref.e / FLOOR_FACTOR <= ours.e_inf <= ref.e * FLOOR_FACTOR
        elif policy == "rel":
            e_ok = abs(ours.e_inf - ref.e) <= REL_TOL * ref.e
        gate_ord = (policy in ("rel", "floor") and prev_gateable
                    and ref.ord is not None and abs(ref.ord) <= 10.0
                    and ours.ord is not None and math.isfinite(ours.ord))
        if gate_ord:
            tol = ORD_TOL if policy == "rel" else FLOOR_ORD_TOL
            ord_ok = abs(ours.ord - ref.ord) <= tol
        checks.append(RowCheck(ref, ours, policy, e_ok, ord_ok))
        prev_gateable = policy in ("rel", "floor")
    return checks


def _lookup(table_id: str):
    try:
        return TABLES[table_id]
    except KeyError:
        raise ConfigError(f"unknown table '{table_id}'; know {', '.join(TABLES)}") \
            from None


def _run_block(table, case, block, max_m, problem=None) -> Optional[BlockRun]:
    ref_rows = [r for r in block.rows if max_m is None or r.ms[0] <= max_m]
    if not ref_rows:
        return None
    if problem is None:
        problem = case.make_problem()
    spec = StudySpec(problem=problem, scheme=table.scheme,
                     rows=[r.ms + (r.n,) for r in ref_rows],
                     mode=table.mode)
    report = run_study(spec)
    report.meta.update(table=table.table_id, case=case.label,
                       ratio=block.ratio_label)
    return BlockRun(table.table_id, case.label, block.ratio_label,
                    block.ratio, report, _check_rows(ref_rows, report.rows))


def run_table(table_id: str, max_m: Optional[int] = None,
              ratio: Optional[str] = None) -> List[BlockRun]:
    """Re-run one bundled table; rows capped at m1 <= max_m if given.

    ratio, if given, restricts to blocks whose label matches (e.g. '1/6').
    """
    table = _lookup(table_id)
    runs = []
    for case in table.cases:
        problem = case.make_problem()
        for block in case.blocks:
            if ratio is not None and block.ratio_label != ratio:
                continue
            run = _run_block(table, case, block, max_m, problem=problem)
            if run is not None:
                runs.append(run)
    return runs


def run_case_block(table_id: str, case_label: str, ratio_label: str,
                   max_m: Optional[int] = None) -> BlockRun:
    """One (case, ratio) block of a bundled table, with its own grid cap."""
    table = _lookup(table_id)
    for case in table.cases:
        if case.label != case_label:
            continue
        for block in case.blocks:
            if block.ratio_label == ratio_label:
                run = _run_block(table, case, block, max_m)
                if run is None:
                    raise ConfigError(
                        f"{table_id} case {case_label} r={ratio_label}: "
                        f"no rows with m1 <= {max_m}")
                return run
    raise ConfigError(f"no block {case_label}/r={ratio_label} in {table_id}")


def _fmt_e(v: float) -> str:
    return f"{v:.6e}"


def render_block(run: BlockRun, check: bool = False) -> str:
    lines = [f"[{run.table_id}] case {run.case_label}  r={run.ratio_label}  "
             f"({TABLES[run.table_id].title})"]
    for c in run.checks:
        ms = "x".join(str(m) for m in c.ref.ms)
        ours = c.ours
        order = "*" if ours.ord is None else f"{ours.ord:.4f}"
        line = f"  {ms:>14s} n={ours.n:<7d} E={_fmt_e(ours.e_inf)} ord={order:>9s}"
        if check:
            verdict = []
            for tag, ok in (("E", c.e_ok), ("ord", c.ord_ok)):
                if ok is True:
                    verdict.append(f"{tag}:ok")
                elif ok is False:
                    verdict.append(f"{tag}:FAIL")
            note = c.policy if c.policy in ("skip", "report", "blowup", "floor") else ""
            ref = f" ref={_fmt_e(c.ref.e)}" if c.policy != "skip" else " ref=(unchecked)"
            line += ref + ("  " + " ".join(verdict) if verdict else "") \
                + (f"  [{note}]" if note else "")
        lines.append(line)
    return "\n".join(lines)


def emit_table_csvs(runs: List[BlockRun], outdir: str) -> List[str]:
    paths = []
    for run in runs:
        label = run.ratio_label.replace("/", "-")
        name = f"{run.table_id}_case{run.case_label}_r{label}.csv"
        paths.append(emit_csv(run.report, os.path.join(outdir, name)))
    return paths

import math

import numpy as np
import pytest

import corrdiff as cd
from corrdiff.errors import ConfigError
from corrdiff.harness import (StudyRow, StudySpec, attach_orders, emit_csv,
                              observed_order, parse_csv, read_snapshot,
                              run_study, run_two_grid, snapshot_fields)


def test_synthetic_orders_exact_powers_of_four():
    rows = [StudyRow(5, 10, None, 100, e) for e in (1e-2, 2.5e-3, 6.25e-4)]
    attach_orders(rows)
    assert rows[0].ord is None
    assert rows[1].ord == pytest.approx(2.0, abs=1e-14)
    assert rows[2].ord == pytest.approx(2.0, abs=1e-14)


def test_order_scale_invariance():
    rng = np.random.default_rng(0)
    errs = rng.uniform(1e-9, 1e-2, size=6)
    base = [observed_order(a, b) for a, b in zip(errs, errs[1:])]
    # power-of-two scales leave the quotient bit-identical, hence the orders
    for scale in (0.25, 2.0, 2.0**30):
        scaled = [observed_order(scale * a, scale * b) for a, b in zip(errs, errs[1:])]
        assert scaled == base
    # general scales only perturb the quotient in its last ulp
    for scale in (1e-7, 3.7, 1e9):
        scaled = [observed_order(scale * a, scale * b) for a, b in zip(errs, errs[1:])]
        assert scaled == pytest.approx(base, abs=1e-12)


def test_order_artifacts_for_blowup():
    assert observed_order(1e-5, 1e70) < -200
    assert observed_order(1e-5, float("inf")) == float("-inf")
    assert math.isnan(observed_order(0.0, 1.0))


def test_exact_study_reproduces_reference_rows():
    spec = StudySpec(problem=cd.diffusion2d_exp(4.0, 1.0),
                     scheme="corrected_diffusion",
                     rows=[(5, 10, 600), (10, 20, 2400)])
    report = run_study(spec)
    assert report.rows[0].e_inf == pytest.approx(2.0937e-8, rel=0.05)
    assert report.rows[1].ord == pytest.approx(3.9690, abs=0.1)


def test_exact_mode_requires_exact_solution():
    spec = StudySpec(problem=cd.varcoef2d_gaussian(4.0, 1.0),
                     scheme="corrected_varcoef", rows=[(10, 20, 24)], mode="exact")
    with pytest.raises(ConfigError):
        run_study(spec)


def test_two_grid_rejects_non_doubling_rows():
    spec = StudySpec(problem=cd.varcoef2d_gaussian(4.0, 1.0),
                     scheme="corrected_varcoef",
                     rows=[(10, 20, 24), (30, 60, 96)], mode="two_grid")
    with pytest.raises(ConfigError, match="double"):
        run_study(spec)


def test_two_grid_against_exact_orders_agree():
    # both error modes see the same fourth-order decay at ratio 1/6
    prob = cd.diffusion2d_exp(4.0, 1.0)
    rows = [(5, 10, 600), (10, 20, 2400), (20, 40, 9600)]
    exact = run_study(StudySpec(problem=prob, scheme="corrected_diffusion",
                                rows=rows, mode="exact"))
    two = run_study(StudySpec(problem=prob, scheme="corrected_diffusion",
                              rows=rows, mode="two_grid"))
    for re_, rt in zip(exact.rows[1:], two.rows[1:]):
        assert abs(re_.ord - rt.ord) <= 0.15


def test_two_grid_divergence_flag():
    prob = cd.diffusion2d_exp(4.0, 1.0)
    g = cd.build_grid2(0, 1, 0, 1, 1.0, 20, 40, 100, 4.0, 1.0)
    res = run_two_grid(prob, g, "corrected_diffusion")
    assert res.diverged


def test_error_monotone_under_refinement():
    report = run_study(StudySpec(problem=cd.diffusion2d_exp(4.0, 1.0),
                                 scheme="corrected_diffusion",
                                 rows=[(5, 10), (10, 20), (20, 40)], ratio=1 / 6))
    errs = [r.e_inf for r in report.rows]
    assert errs[0] > errs[1] > errs[2]


def test_csv_roundtrip(tmp_path):
    report = run_study(StudySpec(problem=cd.diffusion2d_exp(4.0, 1.0),
                                 scheme="corrected_diffusion",
                                 rows=[(5, 10, 600), (10, 20, 2400)]))
    path = emit_csv(report, str(tmp_path / "out.csv"))
    with open(path) as f:
        lines = f.read().strip().split("\n")
    assert lines[0] == "m1,m2,m3,n,E_inf,ord"
    assert len(lines) == 3
    back = parse_csv(path)
    for orig, rt in zip(report.rows, back):
        assert (orig.m1, orig.m2, orig.m3, orig.n) == (rt.m1, rt.m2, rt.m3, rt.n)
        assert rt.e_inf == pytest.approx(orig.e_inf, rel=1e-6)
        if orig.ord is None:
            assert rt.ord is None
        else:
            assert rt.ord == pytest.approx(orig.ord, abs=1e-4)


def test_csv_single_row_and_3d(tmp_path):
    report = run_study(StudySpec(problem=cd.diffusion3d_exp(1.0, 1.0, 1.0),
                                 scheme="corrected_3d", rows=[(5, 5, 5, 150)]))
    path = emit_csv(report, str(tmp_path / "t.csv"))
    lines = open(path).read().strip().split("\n")
    assert len(lines) == 2
    assert lines[1].startswith("5,5,5,150,")
    row = parse_csv(path)[0]
    assert row.m3 == 5 and row.ord is None


def test_snapshots_initial_level_equals_phi(tmp_path):
    prob = cd.diffusion2d_exp(4.0, 1.0)
    g = cd.build_grid2(0, 1, 0, 1, 1.0, 5, 10, 20, 4.0, 1.0)
    paths, _ = snapshot_fields(prob, g, "corrected_diffusion", [0.0, 0.5],
                               str(tmp_path))
    assert len(paths) == 2
    meta, vals = read_snapshot(paths[0])
    assert meta[:2] == [6.0, 11.0]
    assert meta[-1] == 0.0
    X, Y = g.mesh
    want = prob.phi(X, Y).ravel()
    assert np.abs(vals - want).max() <= 1e-16
    meta2, _ = read_snapshot(paths[1])
    assert meta2[-1] == pytest.approx(0.5, abs=g.tau / 2)


def test_snapshot_respects_layout_order(tmp_path):
    prob = cd.diffusion2d_exp(4.0, 1.0)
    g = cd.build_grid2(0, 1, 0, 1, 1.0, 5, 10, 4, 4.0, 1.0)
    paths, _ = snapshot_fields(prob, g, "corrected_diffusion", [0.0], str(tmp_path))
    _, vals = read_snapshot(paths[0])
    # x runs fastest: the first m1+1 values are the j=0 row
    X, Y = g.mesh
    row0 = prob.phi(X, Y)[0, :]
    assert np.array_equal(vals[: g.m1 + 1], row0)


def test_kr97_snapshot_respects_max_principle(tmp_path):
    prob = cd.kr97_case1()
    # modest grid at ratio 1/6 over (-6,2)x(0,8)
    g = cd.build_grid2(-6, 2, 0, 8, 0.5, 80, 80, 500, prob.a, prob.b)
    paths, res = snapshot_fields(prob, g, "nonlinear", [0.5], str(tmp_path))
    assert not res.diverged
    _, vals = read_snapshot(paths[0])
    assert vals.max() <= 1.0 + 1e-6
    assert len(paths) == 1

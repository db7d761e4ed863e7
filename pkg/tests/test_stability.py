import math

import numpy as np
import pytest

import corrdiff as cd
from corrdiff.functions import CoeffField
from corrdiff.problems import LinearProblem2
from corrdiff.schemes2d import SchemeKind2


def grid_for(a, b, m1, m2, n, T=1.0):
    return cd.build_grid2(0, 1, 0, 1, T, m1, m2, n, a, b)


def test_weights_no_convection_at_sixth():
    g = grid_for(4.0, 1.0, 5, 10, 600)
    S = cd.max_principle_coeffs(4.0, 1.0, 0.0, 0.0, g).S
    third = (1 / 6) * (2 / 3)
    assert S[0] == pytest.approx(third, rel=1e-14)
    assert S[1] == pytest.approx(third, rel=1e-14)
    assert S[2] == pytest.approx(third, rel=1e-14)
    assert S[3] == pytest.approx(third, rel=1e-14)
    assert S[4] == pytest.approx((2 / 3) ** 2, rel=1e-14)
    for k in range(5, 9):
        assert S[k] == pytest.approx((1 / 6) ** 2, rel=1e-14)


def test_weights_sum_to_one_random_sweep():
    # draws cover the whole range the decomposition is used in (step ratios
    # to 0.6, convection to twice the CFL bound); with weights of order one
    # the algebraic identity must hold to within accumulation roundoff
    rng = np.random.default_rng(123)
    for _ in range(1000):
        a = rng.uniform(0.01, 10.0)
        rx_t, ry_t = rng.uniform(1e-3, 0.6, 2)
        m1, m2 = int(rng.integers(3, 50)), int(rng.integers(3, 50))
        hx, hy = 1.0 / m1, 1.0 / m2
        tau = rx_t * hx**2 / a
        b = ry_t * hy**2 / tau
        c = rng.uniform(-2.0, 2.0) * 2.0 * a / hx
        d = rng.uniform(-2.0, 2.0) * 2.0 * b / hy
        g = cd.build_grid2(0, 1, 0, 1, tau, m1, m2, 1, a, b)
        coeffs = cd.max_principle_coeffs(a, b, c, d, g)
        assert abs(coeffs.total - 1.0) <= 1e-13


def test_weights_match_one_hot_extraction():
    a, b, c0, d0 = 1.3, 0.7, -2.0, 1.5
    g = grid_for(a, b, 5, 5, 50)
    prob = LinearProblem2(
        a=a, b=b, c=CoeffField.constant(c0), d=CoeffField.constant(d0),
        source=None, phi=lambda x, y: np.zeros_like(x), alpha=None, exact=None)
    S = cd.max_principle_coeffs(a, b, c0, d0, g).S
    # neighbor offsets in the order of the weight tuple
    offsets = [(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0),
               (1, 1), (1, -1), (-1, 1), (-1, -1)]
    ci, cj = 2, 2
    for w, (di, dj) in zip(S, offsets):
        e = np.zeros(g.shape)
        e[cj + dj, ci + di] = 1.0
        out = cd.step_corrected_constcoef(e, prob, g)
        assert out[cj, ci] == pytest.approx(w, rel=1e-13, abs=1e-15)


def test_cfl_2d_reference_case():
    g = grid_for(4.0, 1.0, 5, 10, 600)
    rep = cd.cfl_check_2d(4.0, 1.0, -10.0, 20.0, g)
    assert rep.ok
    lhs = [c.lhs for c in rep.conditions]
    rhs = [c.rhs for c in rep.conditions]
    assert lhs[1] == pytest.approx(2.0, rel=1e-13)
    assert rhs[1] == pytest.approx(8.0, rel=1e-13)
    assert lhs[2] == pytest.approx(2.0, rel=1e-13)
    assert rhs[2] == pytest.approx(2.0, rel=1e-13)


def test_cfl_2d_ratio_boundary():
    g = grid_for(1.0, 1.0, 10, 10, 200)  # rx = ry = 1/2
    rep = cd.cfl_check_2d(1.0, 1.0, 0.0, 0.0, g)
    assert rep.ok
    assert rep.conditions[0].slack == pytest.approx(0.0, abs=1e-14)
    g = grid_for(1.0, 1.0, 10, 10, 196)  # rx just above 1/2
    rep = cd.cfl_check_2d(1.0, 1.0, 0.0, 0.0, g)
    assert not rep.ok
    assert not rep.conditions[0].ok


def test_cfl_3d_cases():
    g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, 10, 10, 10, 600, 1.0, 1.0, 1.0)
    rep = cd.cfl_check_3d(1.0, 1.0, 1.0, 0.0, 0.0, 0.0, g)
    assert rep.ok
    # rx = ry = rz = 0.26
    g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, 10, 10, 10, 385, 1.001, 1.001, 1.001)
    rep = cd.cfl_check_3d(1.001, 1.001, 1.001, 0.0, 0.0, 0.0, g)
    assert not rep.ok

    g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, 10, 10, 10, 600, 1.0, 1.0, 1.0)
    rep = cd.cfl_check_3d(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, g)
    assert rep.ok
    bound = rep.conditions[1].rhs
    assert bound == pytest.approx(min(2.0, math.sqrt((2 / 3) ** 3 / 3) / (1 / 6)),
                                  rel=1e-13)
    assert bound == pytest.approx(1.8856, rel=1e-3)


def test_cfl_classical():
    assert cd.cfl_classical(2, (0.25, 0.25)).ok
    assert cd.cfl_classical(3, (1 / 6, 1 / 6, 1 / 6)).ok
    assert not cd.cfl_classical(2, (0.3, 0.3)).ok


def test_region_witness_points():
    # corrected-3D and classical-3D stability regions overlap neither way
    p1 = (0.24, 0.24, 0.24)
    assert cd.cfl_corrected(3, p1).ok
    assert not cd.cfl_classical(3, p1).ok
    p2 = (0.05, 0.05, 0.3)
    assert not cd.cfl_corrected(3, p2).ok
    assert cd.cfl_classical(3, p2).ok
    p3 = (0.4, 0.4)
    assert cd.cfl_corrected(2, p3).ok
    assert not cd.cfl_classical(2, p3).ok


def test_weights_nonnegative_whenever_cfl_passes():
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 10000:
        a, b = rng.uniform(0.01, 10, 2)
        c, d = rng.uniform(-30, 30, 2)
        m1, m2 = int(rng.integers(2, 60)), int(rng.integers(2, 60))
        n = int(rng.integers(1, 2000))
        g = grid_for(a, b, m1, m2, n)
        if not cd.cfl_check_2d(a, b, c, d, g).ok:
            continue
        coeffs = cd.max_principle_coeffs(a, b, c, d, g)
        assert coeffs.min >= -1e-14, (a, b, c, d, g.rx, g.ry)
        checked += 1


def test_monotone_damping_zero_data_2d():
    rng = np.random.default_rng(9)
    prob = LinearProblem2(
        a=1.0, b=1.0, c=CoeffField.constant(-3.0), d=CoeffField.constant(2.0),
        source=None, phi=lambda x, y: np.zeros_like(x), alpha=None, exact=None)
    g = grid_for(1.0, 1.0, 12, 12, 600)
    assert cd.cfl_check_2d(1.0, 1.0, -3.0, 2.0, g).ok
    from corrdiff.schemes2d import Stepper2D
    u0 = np.zeros(g.shape)
    u0[1:-1, 1:-1] = rng.standard_normal((g.m2 - 1, g.m1 - 1))
    st = Stepper2D(prob, g, SchemeKind2.CORRECTED_CONSTCOEF, u0=u0)
    prev = np.abs(st.u).max()
    for _ in range(60):
        st.step()
        cur = np.abs(st.u).max()
        assert cur <= prev + 1e-14
        prev = cur


def test_monotone_damping_zero_data_3d():
    from corrdiff.problems import LinearProblem3
    from corrdiff.schemes3d import SchemeKind3, Stepper3D
    rng = np.random.default_rng(10)
    prob = LinearProblem3(
        k1=1.0, k2=1.0, k3=1.0, l1=0.0, l2=0.0, l3=0.0, source=None,
        phi=lambda x, y, z: np.zeros_like(x), alpha=None, exact=None)
    g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, 8, 8, 8, 400, 1.0, 1.0, 1.0)
    assert cd.cfl_check_3d(1.0, 1.0, 1.0, 0.0, 0.0, 0.0, g).ok
    u0 = np.zeros(g.shape)
    u0[1:-1, 1:-1, 1:-1] = rng.standard_normal((g.m3 - 1, g.m2 - 1, g.m1 - 1))
    st = Stepper3D(prob, g, SchemeKind3.CORRECTED, u0=u0)
    prev = np.abs(st.u).max()
    for _ in range(50):
        st.step()
        cur = np.abs(st.u).max()
        assert cur <= prev + 1e-14
        prev = cur


def test_heuristic_checks_are_labeled():
    prob = cd.varcoef2d_gaussian(4.0, 1.0)
    g = cd.build_grid2(-5, 5, -5, 5, 1.0, 20, 40, 96, 4.0, 1.0)
    rep = cd.cfl_heuristic_varcoef(prob, g)
    assert rep.heuristic
    # max |sin|, |cos| over the grid sit just below 1
    assert 0.99 * g.hx <= rep.conditions[1].lhs <= g.hx
    assert 0.99 * g.hy <= rep.conditions[2].lhs <= g.hy

    nl = cd.burgers(1.0)
    gn = cd.build_grid2(0, 1, 0, 1, 1.0, 10, 10, 600, 1.0, 1.0)
    rep = cd.cfl_heuristic_nonlinear(nl, gn)
    assert rep.heuristic
    assert rep.ok

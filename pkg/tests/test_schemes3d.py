import numpy as np
import pytest

import corrdiff as cd
from corrdiff.errors import ConfigError
from corrdiff.problems import LinearProblem3
from corrdiff.schemes3d import SchemeKind3, Stepper3D, solve3
from oracles import reference_step_linear3d


def zero_problem3(k=(1.0, 1.0, 1.0), l=(0.0, 0.0, 0.0)):
    return LinearProblem3(
        k1=k[0], k2=k[1], k3=k[2], l1=l[0], l2=l[1], l3=l[2], source=None,
        phi=lambda x, y, z: np.zeros_like(x), alpha=None, exact=None)


def small_grid3(m=5, n=10, k=(1.0, 1.0, 1.0)):
    return cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, m, m, m, n, *k)


def test_zero_data_stays_zero():
    g = small_grid3()
    for scheme in SchemeKind3:
        res = solve3(zero_problem3(), g, scheme)
        assert not res.diverged
        assert np.all(res.u == 0.0)


@pytest.mark.parametrize("scheme", ["corrected_3d", "classical_3d",
                                    "corrected_3d_convection"])
def test_one_hot_and_random_fields_match_reference(scheme):
    k = (1.3, 0.7, 0.4)
    l = (0.0, 0.0, 0.0) if scheme != "corrected_3d_convection" else (0.9, -1.1, 0.5)
    prob = LinearProblem3(
        k1=k[0], k2=k[1], k3=k[2], l1=l[0], l2=l[1], l3=l[2],
        source=cd.exp_affine(0.8, 0.4, -0.3, -0.6, kz=0.2),
        phi=lambda x, y, z: np.zeros_like(x), alpha=None, exact=None)
    g = small_grid3(5, 20, k=k)

    fields = []
    for idx in [(1, 1, 1), (2, 3, 2), (4, 2, 3)]:
        e = np.zeros(g.shape)
        e[idx] = 1.0
        fields.append(e)
    rng = np.random.default_rng(8)
    fields.append(rng.standard_normal(g.shape))

    for u in fields:
        want = reference_step_linear3d(u, prob, g, scheme, k=1)
        st = Stepper3D(prob, g, SchemeKind3(scheme), u0=u, k0=1)
        st.step()
        got = st.u
        core = (slice(1, -1),) * 3
        scale = max(1.0, np.abs(want[core]).max())
        assert np.abs(got[core] - want[core]).max() <= 1e-13 * scale


def test_convection_extension_reduces_bitwise_at_zero_wind():
    k = (1.3, 0.7, 0.4)
    prob = zero_problem3(k=k)
    g = small_grid3(5, 10, k=k)
    rng = np.random.default_rng(3)
    u = rng.standard_normal(g.shape)
    a = cd.step_corrected_3d(u, prob, g)
    b = cd.step_corrected_3d_convection(u, prob, g)
    core = (slice(1, -1),) * 3
    assert np.array_equal(a[core], b[core])


def test_plain_schemes_reject_wind():
    prob = zero_problem3(l=(1.0, 0.0, 0.0))
    g = small_grid3()
    for scheme in (SchemeKind3.CORRECTED, SchemeKind3.CLASSICAL):
        with pytest.raises(ConfigError):
            Stepper3D(prob, g, scheme)


def test_z_independent_data_matches_2d_constcoef_slicewise():
    # constant wind, z-independent manufactured data: every z slice of the
    # 3D update equals the 2D constant-coefficient update
    from corrdiff.functions import CoeffField
    from corrdiff.problems import LinearProblem2
    a, b, kz3 = 1.2, 0.8, 0.5
    c0, d0 = 0.7, -0.4
    src2 = cd.exp_affine(0.9, 0.35, -0.25, -0.7)
    src3 = cd.exp_affine(0.9, 0.35, -0.25, -0.7, kz=0.0)
    prob3 = LinearProblem3(k1=a, k2=b, k3=kz3, l1=c0, l2=d0, l3=0.0,
                           source=src3, phi=lambda x, y, z: np.zeros_like(x),
                           alpha=None, exact=None)
    prob2 = LinearProblem2(a=a, b=b, c=CoeffField.constant(c0),
                           d=CoeffField.constant(d0), source=src2,
                           phi=lambda x, y: np.zeros_like(x), alpha=None, exact=None)
    m, n = 6, 40
    g3 = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, m, m, m, n, a, b, kz3)
    g2 = cd.build_grid2(0, 1, 0, 1, 1.0, m, m, n, a, b)
    rng = np.random.default_rng(12)
    slab = rng.standard_normal((m + 1, m + 1))
    u3 = np.broadcast_to(slab, g3.shape).copy()
    got3 = cd.step_corrected_3d_convection(u3, prob3, g3)
    got2 = cd.step_corrected_constcoef(slab.copy(), prob2, g2)
    core = (slice(1, -1), slice(1, -1))
    for lz in range(1, m):
        diff = np.abs(got3[lz][core] - got2[core]).max()
        assert diff <= 1e-13 * max(1.0, np.abs(got2[core]).max())


def test_axis_permutation_equivariance():
    # permuting (coefficients, counts, data) leaves the error invariant
    perm_errs = []
    for k, m in [((1.0, 0.01, 0.04), (6, 10, 8)), ((0.04, 1.0, 0.01), (8, 6, 10)),
                 ((0.01, 0.04, 1.0), (10, 8, 6))]:
        prob = cd.diffusion3d_exp(*k)
        g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, *m, 400, *k)
        perm_errs.append(solve3(prob, g, SchemeKind3.CORRECTED).final_err)
    assert perm_errs[0] == pytest.approx(perm_errs[1], rel=1e-13)
    assert perm_errs[0] == pytest.approx(perm_errs[2], rel=1e-13)


def test_reference_values_small_rows():
    prob = cd.diffusion3d_exp(1.0, 1.0, 1.0)
    g = small_grid3(5, 150)
    assert solve3(prob, g, SchemeKind3.CORRECTED).final_err \
        == pytest.approx(4.4890e-7, rel=0.05)
    assert solve3(prob, g, SchemeKind3.CLASSICAL).final_err \
        == pytest.approx(1.1712e-4, rel=0.05)


def test_convection_extension_observed_order_four_at_sixth():
    prob = cd.convection3d_exp(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)
    errs = []
    for m, n in [(5, 150), (10, 600)]:
        g = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, m, m, m, n, 1.0, 1.0, 1.0)
        errs.append(solve3(prob, g, SchemeKind3.CORRECTED_CONVECTION).final_err)
    order = np.log2(errs[0] / errs[1])
    assert 3.6 <= order <= 4.4

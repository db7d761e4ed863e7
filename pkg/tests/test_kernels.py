"""Backend parity: the compiled kernels must match the numpy fallback."""

import numpy as np
import pytest

from corrdiff import kernels
from corrdiff import _kernels_py as kpy

compiled = kernels.backend_pair()[1]
needs_compiled = pytest.mark.skipif(compiled is None,
                                    reason="compiled extension not built")


def rand(shape, seed):
    return np.ascontiguousarray(np.random.default_rng(seed).standard_normal(shape))


@needs_compiled
def test_linear2d_const_parity():
    u = rand((13, 11), 0)
    src = rand((13, 11), 1)
    args = (0.11, 0.07, -0.02, 0.03, 0.004, 0.0008, 0.0005, -0.0003)
    for s in (None, src):
        out_c = np.zeros_like(u)
        out_p = np.zeros_like(u)
        mc = kernels.linear2d_step(out_c, u, *args, s)
        mp = kpy.linear2d_step(out_p, u, *args, s)
        assert np.array_equal(out_c[1:-1, 1:-1], out_p[1:-1, 1:-1])
        assert mc == pytest.approx(mp, rel=1e-15)


@needs_compiled
def test_linear2d_var_parity():
    u = rand((9, 14), 2)
    coefs = [rand((9, 14), 10 + k) * 0.05 for k in range(7)]
    kxxyy = 0.0007
    out_c = np.zeros_like(u)
    out_p = np.zeros_like(u)
    args = coefs[:5] + [kxxyy] + coefs[5:]
    kernels.linear2d_step(out_c, u, *args, None)
    kpy.linear2d_step(out_p, u, *args, None)
    assert np.array_equal(out_c[1:-1, 1:-1], out_p[1:-1, 1:-1])


@needs_compiled
def test_nonlinear2d_parity():
    u = rand((10, 10), 3)
    arrs = [rand((10, 10), 20 + k) for k in range(9)]
    out_c = np.zeros_like(u)
    out_p = np.zeros_like(u)
    kernels.nonlinear2d_step(out_c, u, 1.3, 0.7, 0.01, 0.1, 0.2, *arrs)
    kpy.nonlinear2d_step(out_p, u, 1.3, 0.7, 0.01, 0.1, 0.2, *arrs)
    assert np.array_equal(out_c[1:-1, 1:-1], out_p[1:-1, 1:-1])

    out_c2 = np.zeros_like(u)
    out_p2 = np.zeros_like(u)
    kernels.nonlinear2d_classical_step(out_c2, u, 1.3, 0.7, 0.01, 0.1, 0.2, *arrs[:3])
    kpy.nonlinear2d_classical_step(out_p2, u, 1.3, 0.7, 0.01, 0.1, 0.2, *arrs[:3])
    assert np.array_equal(out_c2[1:-1, 1:-1], out_p2[1:-1, 1:-1])


@needs_compiled
def test_linear3d_parity():
    u = rand((7, 8, 9), 4)
    src = rand((7, 8, 9), 5)
    core = (slice(1, -1),) * 3
    for s in (None, src):
        out_c = np.zeros_like(u)
        out_p = np.zeros_like(u)
        kernels.linear3d_step(out_c, u, 0.1, 0.07, 0.05, 3e-3, 2e-3, 1e-3, s)
        kpy.linear3d_step(out_p, u, 0.1, 0.07, 0.05, 3e-3, 2e-3, 1e-3, s)
        assert np.array_equal(out_c[core], out_p[core])

    args = (0.1, 0.07, 0.05, 0.01, -0.02, 0.015, 3e-3, 2e-3, 1e-3,
            1e-3, -2e-3, 3e-3, 1e-4, 2e-4, -1e-4, 3e-4, -2e-4, 1e-4)
    out_c = np.zeros_like(u)
    out_p = np.zeros_like(u)
    kernels.linear3d_full_step(out_c, u, *args, src)
    kpy.linear3d_full_step(out_p, u, *args, src)
    assert np.array_equal(out_c[core], out_p[core])


@needs_compiled
def test_max_helpers_parity():
    a = rand((40, 17), 6)
    b = rand((40, 17), 7)
    assert kernels.max_abs(a) == kpy.max_abs(a)
    assert kernels.max_abs_diff(a, b) == kpy.max_abs_diff(a, b)
    a[3, 5] = np.inf
    assert kernels.max_abs(a) == np.inf
    a[3, 5] = np.nan
    assert np.isnan(kernels.max_abs(a)) or kernels.max_abs(a) == np.inf


def test_python_backend_full_solve_matches_reference_value():
    # the fallback alone reproduces a bundled reference entry
    import subprocess, sys
    code = (
        "import os; os.environ['CORRDIFF_PURE_PYTHON']='1';\n"
        "import corrdiff as cd\n"
        "assert cd.BACKEND == 'python'\n"
        "prob = cd.diffusion2d_exp(4.0, 1.0)\n"
        "g = cd.build_grid2(0,1,0,1,1.0, 5,10,600, 4.0,1.0)\n"
        "res = cd.solve2(prob, g, 'corrected_diffusion')\n"
        "assert abs(res.final_err - 2.0937e-8) <= 0.05 * 2.0937e-8\n"
        "print('python backend ok')\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "python backend ok" in out.stdout

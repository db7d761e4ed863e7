#!/usr/bin/env python3
"""Benchmark the compiled stencil kernels against the numpy fallback.

Runs representative time-stepping workloads through both backends and
prints per-step times and million-lattice-updates-per-second (MLUPS).

    python benchmarks/bench_kernels.py [--steps N]
"""

import argparse
import time

import corrdiff as cd
from corrdiff import _kernels_py as kpy
from corrdiff.kernels import backend_pair
from corrdiff.nonlinear2d import NonlinearStepper2D
from corrdiff.schemes2d import Stepper2D
from corrdiff.schemes3d import SchemeKind3, Stepper3D


def time_stepper(make, steps):
    st = make()
    st.step()  # warm up
    t0 = time.perf_counter()
    for _ in range(steps):
        st.step()
    return (time.perf_counter() - t0) / steps


def workloads():
    diff = cd.diffusion2d_exp(4.0, 1.0)
    g_diff = cd.build_grid2(0, 1, 0, 1, 1.0, 320, 640, 800, 4.0, 1.0)
    var = cd.varcoef2d_gaussian(4.0, 1.0)
    g_var = cd.build_grid2(-5, 5, -5, 5, 1.0, 320, 640, 800, 4.0, 1.0)
    burg = cd.burgers(0.01)
    g_burg = cd.build_grid2(0, 1, 0, 1, 1.0, 320, 320, 800, 0.01, 0.01)
    p3 = cd.diffusion3d_exp(1.0, 1.0, 1.0)
    g3 = cd.build_grid3(0, 1, 0, 1, 0, 1, 1.0, 80, 80, 80, 800, 1.0, 1.0, 1.0)
    return [
        ("2D corrected diffusion 321x641",
         lambda: Stepper2D(diff, g_diff, "corrected_diffusion"),
         321 * 641),
        ("2D corrected varcoef  321x641",
         lambda: Stepper2D(var, g_var, "corrected_varcoef"),
         321 * 641),
        ("2D nonlinear (fluxes) 321x321",
         lambda: NonlinearStepper2D(burg, g_burg),
         321 * 321),
        ("3D corrected diffusion 81^3",
         lambda: Stepper3D(p3, g3, SchemeKind3.CORRECTED),
         81 ** 3),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=60,
                        help="timed steps per workload (default 60)")
    args = parser.parse_args()

    _, compiled = backend_pair()
    if compiled is None:
        print("compiled extension not available; benchmarking fallback only")

    import corrdiff.kernels as K
    names = ("linear2d_step", "nonlinear2d_step", "nonlinear2d_classical_step",
             "linear3d_step", "linear3d_full_step", "max_abs", "max_abs_diff",
             "max_abs_scaled_diff")
    selected = {k: getattr(K, k) for k in names}  # import-time selection

    print(f"{'workload':34s} {'backend':9s} {'ms/step':>9s} {'MLUPS':>8s}  speedup")
    for name, make, points in workloads():
        times = {}
        if compiled is not None:
            times["compiled"] = time_stepper(make, args.steps)
        for k in names:
            setattr(K, k, getattr(kpy, k))
        try:
            times["python"] = time_stepper(make, max(args.steps // 4, 5))
        finally:
            for k, v in selected.items():
                setattr(K, k, v)
        for label in ("compiled", "python"):
            if label not in times:
                continue
            dt = times[label]
            speed = ""
            if label == "python" and "compiled" in times:
                speed = f"{dt / times['compiled']:.1f}x slower"
            print(f"{name:34s} {label:9s} {dt * 1e3:9.3f} {points / dt / 1e6:8.0f}  {speed}")


if __name__ == "__main__":
    main()

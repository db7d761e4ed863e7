"""Corrected explicit Euler schemes for convection-diffusion problems.

Explicit forward-Euler / central-difference schemes whose coefficients
absorb the leading truncation error, giving fourth-order space-time
convergence at step ratio 1/6 (second order otherwise) together with a
relaxed CFL condition.  Covers 2D linear problems (constant and variable
convection), 2D nonlinear flux/reaction problems under Dirichlet or
fourth-order one-sided Neumann closures, and 3D diffusion, plus classical
Euler baselines, stability checks and a convergence-study harness.
"""

from .errors import ConfigError, MissingDerivativeError
from .functions import CoeffField, ScalarFunc1, SpaceTimeFunc, exp_affine
from .grid import (Grid2, Grid3, build_grid2, build_grid3, grid2_from_ratio,
                   grid3_from_ratio, index2, index3)
from .harness import (StudyReport, StudyRow, StudySpec, emit_csv, parse_csv,
                      run_single, run_study, run_two_grid, snapshot_fields)
from .kernels import BACKEND
from .neumann import (SweepPlan, close_x_high, close_x_low, close_y_high,
                      close_y_low, neumann_sweep, sweep_plan)
from .nonlinear2d import (NonlinearStepper2D, solve_nonlinear, step_nonlinear,
                          step_nonlinear_classical)
from .problems import (DIRICHLET, NEUMANN, LinearProblem2, LinearProblem3,
                       NeumannData, NonlinearProblem2, builtin_problem,
                       burgers, chafee_infante, convection2d_exp,
                       convection3d_exp, diffusion2d_exp, diffusion3d_exp,
                       fisher, kr97_case1, kr97_case2, neumann_from_exact,
                       varcoef2d_gaussian)
from .schemes2d import (SchemeKind2, SolveResult, SourceCorrection, Stepper2D,
                        solve2, source_term, step_classical,
                        step_corrected_constcoef, step_corrected_diffusion,
                        step_corrected_varcoef)
from .schemes3d import (SchemeKind3, Stepper3D, solve3, step_classical_3d,
                        step_corrected_3d, step_corrected_3d_convection)
from .stability import (CflCondition, CflReport, MaxPrincipleCoeffs,
                        cfl_check_2d, cfl_check_3d, cfl_classical,
                        cfl_corrected, cfl_heuristic_nonlinear,
                        cfl_heuristic_varcoef, max_principle_coeffs)
from .tables import run_table, table_ids

__version__ = "0.1.0"

"""Problem descriptions and the built-in problem catalog.

Every built-in ships analytic derivatives for its coefficients, fluxes,
sources and (where known) exact solution, so no numerical differentiation
happens anywhere in the engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError
from .functions import CoeffField, ScalarFunc1, SpaceTimeFunc, exp_affine

DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class NeumannData:
    """Normal-derivative data on the four edges of the rectangle.

    alpha1/alpha2 are u_x at x=L1 / x=R1 as functions of (y, t);
    beta1/beta2 are u_y at y=L2 / y=R2 as functions of (x, t).
    """

    alpha1: Callable
    alpha2: Callable
    beta1: Callable
    beta2: Callable


@dataclass(frozen=True)
class LinearProblem2:
    """u_t = a u_xx + b u_yy + c(x,y) u_x + d(x,y) u_y + f(x,y,t) on a rectangle."""

    a: float
    b: float
    c: CoeffField
    d: CoeffField
    source: Optional[SpaceTimeFunc]
    phi: Callable
    alpha: Optional[Callable]  # Dirichlet data (x, y, t); None = homogeneous
    exact: Optional[SpaceTimeFunc]
    L1: float = 0.0
    R1: float = 1.0
    L2: float = 0.0
    R2: float = 1.0
    name: str = "linear2d"

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ConfigError(
                f"diffusion coefficients must be positive, got a={self.a}, b={self.b}")

    @property
    def has_constant_convection(self) -> bool:
        return self.c.is_constant and self.d.is_constant


@dataclass(frozen=True)
class NonlinearProblem2:
    """u_t + f(u)_x + g(u)_y = a u_xx + b u_yy + r(u) on a rectangle."""

    a: float
    b: float
    flux_f: ScalarFunc1
    flux_g: ScalarFunc1
    reaction: ScalarFunc1
    phi: Callable
    boundary: str = DIRICHLET
    alpha: Optional[Callable] = None
    neumann: Optional[NeumannData] = None
    exact: Optional[SpaceTimeFunc] = None
    L1: float = 0.0
    R1: float = 1.0
    L2: float = 0.0
    R2: float = 1.0
    name: str = "nonlinear2d"

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ConfigError("diffusion coefficients must be positive")
        if self.boundary not in (DIRICHLET, NEUMANN):
            raise ConfigError(f"unknown boundary mode '{self.boundary}'")
        if self.boundary == NEUMANN and self.neumann is None:
            raise ConfigError("neumann boundary mode needs NeumannData")


@dataclass(frozen=True)
class LinearProblem3:
    """u_t = k1 u_xx + k2 u_yy + k3 u_zz + l1 u_x + l2 u_y + l3 u_z + f on a box."""

    k1: float
    k2: float
    k3: float
    l1: float
    l2: float
    l3: float
    source: Optional[SpaceTimeFunc]
    phi: Callable
    alpha: Optional[Callable]
    exact: Optional[SpaceTimeFunc]
    L1: float = 0.0
    R1: float = 1.0
    L2: float = 0.0
    R2: float = 1.0
    L3: float = 0.0
    R3: float = 1.0
    name: str = "linear3d"

    def __post_init__(self):
        if self.k1 <= 0 or self.k2 <= 0 or self.k3 <= 0:
            raise ConfigError("diffusion coefficients must be positive")


def _phi_from_exact(exact: SpaceTimeFunc, three_d: bool = False) -> Callable:
    if three_d:
        return lambda x, y, z: exact.value(x, y, z, 0.0)
    return lambda x, y: exact.value(x, y, 0.0)


def neumann_from_exact(exact: SpaceTimeFunc, L1, R1, L2, R2) -> NeumannData:
    """Edge normal-derivative data read off an exact solution's dx/dy."""
    exact.require("dx", "dy")
    return NeumannData(
        alpha1=lambda y, t: exact.dx(np.full_like(y, L1, dtype=float), y, t),
        alpha2=lambda y, t: exact.dx(np.full_like(y, R1, dtype=float), y, t),
        beta1=lambda x, t: exact.dy(x, np.full_like(x, L2, dtype=float), t),
        beta2=lambda x, t: exact.dy(x, np.full_like(x, R2, dtype=float), t),
    )


# ----------------------------------------------------------------------
# Linear built-ins (manufactured solutions)

def zero2d(a: float = 1.0, b: float = 1.0) -> LinearProblem2:
    """All-zero data with the zero exact solution (debugging aid)."""
    z2 = lambda x, y: np.zeros_like(x)
    z3 = lambda x, y, t: np.zeros_like(x)
    exact = SpaceTimeFunc(value=z3, dx=z3, dy=z3, dxx=z3, dyy=z3, dt=z3,
                          name="exact")
    return LinearProblem2(
        a=a, b=b, c=CoeffField.constant(0.0, "c"), d=CoeffField.constant(0.0, "d"),
        source=None, phi=z2, alpha=None, exact=exact, name="zero2d")


def diffusion2d_exp(a: float, b: float) -> LinearProblem2:
    """Pure diffusion on (0,1)^2 with exact solution exp((x+y)/2 - t)."""
    exact = exp_affine(1.0, 0.5, 0.5, -1.0, name="exact")
    src = exp_affine(-(1.0 + a / 4.0 + b / 4.0), 0.5, 0.5, -1.0, name="source")
    return LinearProblem2(
        a=a, b=b, c=CoeffField.constant(0.0, "c"), d=CoeffField.constant(0.0, "d"),
        source=src, phi=_phi_from_exact(exact), alpha=exact, exact=exact,
        name=f"diffusion2d_exp(a={a}, b={b})")


def convection2d_exp(a: float, b: float, c0: float, d0: float) -> LinearProblem2:
    """Constant convection on (0,1)^2 with exact solution exp(x+y-t)."""
    exact = exp_affine(1.0, 1.0, 1.0, -1.0, name="exact")
    src = exp_affine(-(1.0 + a + b + c0 + d0), 1.0, 1.0, -1.0, name="source")
    return LinearProblem2(
        a=a, b=b, c=CoeffField.constant(c0, "c"), d=CoeffField.constant(d0, "d"),
        source=src, phi=_phi_from_exact(exact), alpha=exact, exact=exact,
        name=f"convection2d_exp(a={a}, b={b}, c={c0}, d={d0})")


def varcoef2d_gaussian(a: float, b: float) -> LinearProblem2:
    """Rotating-wind convection c=sin(x+y), d=cos(x+y) on (-5,5)^2.

    Gaussian initial bump, homogeneous Dirichlet data, no source and no
    known exact solution (two-grid error measurement).
    """
    sin, cos = np.sin, np.cos
    c = CoeffField(
        value=lambda x, y: sin(x + y),
        dx=lambda x, y: cos(x + y), dy=lambda x, y: cos(x + y),
        dxx=lambda x, y: -sin(x + y), dyy=lambda x, y: -sin(x + y), name="c")
    d = CoeffField(
        value=lambda x, y: cos(x + y),
        dx=lambda x, y: -sin(x + y), dy=lambda x, y: -sin(x + y),
        dxx=lambda x, y: -cos(x + y), dyy=lambda x, y: -cos(x + y), name="d")
    return LinearProblem2(
        a=a, b=b, c=c, d=d, source=None,
        phi=lambda x, y: np.exp(-x**2 - y**2), alpha=None, exact=None,
        L1=-5.0, R1=5.0, L2=-5.0, R2=5.0,
        name=f"varcoef2d_gaussian(a={a}, b={b})")


def diffusion3d_exp(k1: float, k2: float, k3: float) -> LinearProblem3:
    """3D diffusion on (0,1)^3 with exact solution exp((x+y+z)/2 - t)."""
    exact = exp_affine(1.0, 0.5, 0.5, -1.0, kz=0.5, name="exact")
    src = exp_affine(-(1.0 + (k1 + k2 + k3) / 4.0), 0.5, 0.5, -1.0, kz=0.5,
                     name="source")
    return LinearProblem3(
        k1=k1, k2=k2, k3=k3, l1=0.0, l2=0.0, l3=0.0,
        source=src, phi=_phi_from_exact(exact, three_d=True),
        alpha=exact, exact=exact,
        name=f"diffusion3d_exp(k=({k1}, {k2}, {k3}))")


def convection3d_exp(k1, k2, k3, l1, l2, l3) -> LinearProblem3:
    """3D constant convection-diffusion with exact solution exp((x+y+z)/2 - t)."""
    exact = exp_affine(1.0, 0.5, 0.5, -1.0, kz=0.5, name="exact")
    c0 = -(1.0 + (k1 + k2 + k3) / 4.0 + (l1 + l2 + l3) / 2.0)
    src = exp_affine(c0, 0.5, 0.5, -1.0, kz=0.5, name="source")
    return LinearProblem3(
        k1=k1, k2=k2, k3=k3, l1=l1, l2=l2, l3=l3,
        source=src, phi=_phi_from_exact(exact, three_d=True),
        alpha=exact, exact=exact,
        name="convection3d_exp")


# ----------------------------------------------------------------------
# Nonlinear built-ins

def fisher(boundary: str = DIRICHLET) -> NonlinearProblem2:
    """Logistic reaction-diffusion on (0,1)^2; traveling-wave exact solution."""
    s3 = math.sqrt(3.0) / 6.0

    def w(x, y, t):
        return np.exp(-5.0 / 6.0 * t + s3 * x + s3 * y)

    def val(x, y, t):
        return (1.0 + w(x, y, t)) ** -2.0

    def dx(x, y, t):
        ww = w(x, y, t)
        return -2.0 * s3 * ww * (1.0 + ww) ** -3.0

    exact = SpaceTimeFunc(value=val, dx=dx, dy=dx, name="exact")
    reaction = ScalarFunc1(
        lambda u: u * (1.0 - u),
        lambda u: 1.0 - 2.0 * u,
        lambda u: np.full_like(u, -2.0),
        name="r")
    return _semilinear(exact, reaction, boundary, "fisher")


def chafee_infante(boundary: str = DIRICHLET) -> NonlinearProblem2:
    """Cubic reaction-diffusion on (0,1)^2; tanh-front exact solution."""

    def val(x, y, t):
        return 0.5 * np.tanh(0.25 * x + 0.25 * y + 0.75 * t) + 0.5

    def dx(x, y, t):
        c = np.cosh(0.25 * x + 0.25 * y + 0.75 * t)
        return 0.125 / (c * c)

    exact = SpaceTimeFunc(value=val, dx=dx, dy=dx, name="exact")
    reaction = ScalarFunc1(
        lambda u: u * (1.0 - u * u),
        lambda u: 1.0 - 3.0 * u * u,
        lambda u: -6.0 * u,
        name="r")
    return _semilinear(exact, reaction, boundary, "chafee_infante")


def _semilinear(exact, reaction, boundary, name) -> NonlinearProblem2:
    return NonlinearProblem2(
        a=1.0, b=1.0,
        flux_f=ScalarFunc1.zero("f"), flux_g=ScalarFunc1.zero("g"),
        reaction=reaction, phi=_phi_from_exact(exact),
        boundary=boundary, alpha=exact,
        neumann=neumann_from_exact(exact, 0.0, 1.0, 0.0, 1.0),
        exact=exact, name=name)


def burgers(mu: float = 1.0, boundary: str = DIRICHLET) -> NonlinearProblem2:
    """Viscous quadratic-flux problem on (0,1)^2 with a known decaying wave."""

    def parts(x, y, t):
        E = np.exp(-2.0 * mu * math.pi**2 * t)
        S = np.sin(math.pi * (x + y))
        C = np.cos(math.pi * (x + y))
        return E, S, C, 2.0 + C * E

    def val(x, y, t):
        E, S, C, D = parts(x, y, t)
        return 2.0 * mu * math.pi * S * E / D

    def dx(x, y, t):
        E, S, C, D = parts(x, y, t)
        return 2.0 * mu * math.pi**2 * E * (2.0 * C + E) / (D * D)

    exact = SpaceTimeFunc(value=val, dx=dx, dy=dx, name="exact")
    half_square = ScalarFunc1(
        lambda u: 0.5 * u * u,
        lambda u: u,
        lambda u: np.ones_like(u),
        lambda u: np.zeros_like(u),
        name="f")
    return NonlinearProblem2(
        a=mu, b=mu, flux_f=half_square, flux_g=half_square,
        reaction=ScalarFunc1.zero("r"), phi=_phi_from_exact(exact),
        boundary=boundary, alpha=exact,
        neumann=neumann_from_exact(exact, 0.0, 1.0, 0.0, 1.0),
        exact=exact, name=f"burgers(mu={mu})")


def _disc_indicator(cx: float, cy: float, r2: float) -> Callable:
    def phi(x, y):
        return np.where((x - cx) ** 2 + (y - cy) ** 2 < r2, 1.0, 0.0)
    return phi


def kr97_case1(eps: float = 0.1) -> NonlinearProblem2:
    """Polynomial-flux transport of a disc on (-6,2)x(0,8); no exact solution."""
    flux_f = ScalarFunc1(
        lambda u: u + u * u,
        lambda u: 1.0 + 2.0 * u,
        lambda u: np.full_like(u, 2.0),
        lambda u: np.zeros_like(u),
        name="f")
    flux_g = ScalarFunc1(
        lambda u: (u - 0.25) ** 3,
        lambda u: 3.0 * (u - 0.25) ** 2,
        lambda u: 6.0 * (u - 0.25),
        lambda u: np.full_like(u, 6.0),
        name="g")
    return NonlinearProblem2(
        a=eps, b=eps, flux_f=flux_f, flux_g=flux_g,
        reaction=ScalarFunc1.zero("r"),
        phi=_disc_indicator(0.25, 2.25, 0.5),
        boundary=DIRICHLET, alpha=None, exact=None,
        L1=-6.0, R1=2.0, L2=0.0, R2=8.0, name="kr97_case1")


def _kr97_g_derivs():
    """S-shaped fractional flux g = u^2/(u^2+(1-u)^2) and derivatives.

    Closed forms obtained by hand from the quotient rule; the denominator
    D = u^2+(1-u)^2 is bounded away from zero on [0,1].
    """

    def D(u):
        return u * u + (1.0 - u) ** 2

    def g(u):
        return u * u / D(u)

    def g1(u):
        return 2.0 * u * (1.0 - u) / D(u) ** 2

    def g2(u):
        return 2.0 * (1.0 - 2.0 * u) * (1.0 + 2.0 * u - 2.0 * u * u) / D(u) ** 3

    def g3(u):
        return (-24.0 * u * (1.0 - u) / D(u) ** 3
                + 12.0 * (1.0 - 2.0 * u) ** 2 * (1.0 + 2.0 * u - 2.0 * u * u)
                / D(u) ** 4)

    return g, g1, g2, g3


def kr97_case2(eps: float = 0.01) -> NonlinearProblem2:
    """Two-phase-flow style fluxes on (-3,3)^2 with gravity pull in x."""
    g, g1, g2, g3 = _kr97_g_derivs()

    def h(u):
        return 1.0 - 5.0 * (1.0 - u) ** 2

    def h1(u):
        return 10.0 * (1.0 - u)

    def f(u):
        return g(u) * h(u)

    def f1(u):
        return g1(u) * h(u) + g(u) * h1(u)

    def f2(u):
        return g2(u) * h(u) + 2.0 * g1(u) * h1(u) - 10.0 * g(u)

    def f3(u):
        return g3(u) * h(u) + 3.0 * g2(u) * h1(u) - 30.0 * g1(u)

    flux_f = ScalarFunc1(f, f1, f2, f3, name="f")
    flux_g = ScalarFunc1(g, g1, g2, g3, name="g")
    return NonlinearProblem2(
        a=eps, b=eps, flux_f=flux_f, flux_g=flux_g,
        reaction=ScalarFunc1.zero("r"),
        phi=_disc_indicator(0.0, 0.0, 0.5),
        boundary=DIRICHLET, alpha=None, exact=None,
        L1=-3.0, R1=3.0, L2=-3.0, R2=3.0, name="kr97_case2")


_NONLINEAR_BUILTINS = {
    "fisher": lambda **kw: fisher(**kw),
    "chafeeinfante": lambda **kw: chafee_infante(**kw),
    "chafee_infante": lambda **kw: chafee_infante(**kw),
    "burgersdirichlet": lambda **kw: burgers(boundary=DIRICHLET, **kw),
    "burgersneumann": lambda **kw: burgers(boundary=NEUMANN, **kw),
    "burgers": lambda **kw: burgers(**kw),
    "kr97_casei": lambda **kw: kr97_case1(**kw),
    "kr97_caseii": lambda **kw: kr97_case2(**kw),
    "kr97_case1": lambda **kw: kr97_case1(**kw),
    "kr97_case2": lambda **kw: kr97_case2(**kw),
}


def builtin_problem(name: str, **params) -> NonlinearProblem2:
    """Look up a nonlinear built-in by name (case-insensitive)."""
    key = name.replace("-", "_").lower()
    try:
        factory = _NONLINEAR_BUILTINS[key]
    except KeyError:
        raise ConfigError(f"unknown builtin problem '{name}'") from None
    return factory(**params)

"""Callable bundles: scalar functions of u, space-time functions, coefficient fields.

All callables must accept numpy arrays (the solvers evaluate them on whole
grids at once).  Derivatives are supplied analytically by the caller; a
scheme that needs a missing derivative fails at solver construction, not
at step time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import MissingDerivativeError


@dataclass(frozen=True)
class ScalarFunc1:
    """u -> f(u) with optional derivatives f', f'', f'''."""

    value: Callable
    d1: Optional[Callable] = None
    d2: Optional[Callable] = None
    d3: Optional[Callable] = None
    name: str = "f"

    def require(self, order: int) -> None:
        for k, fn in enumerate((self.d1, self.d2, self.d3), start=1):
            if k <= order and fn is None:
                raise MissingDerivativeError(self.name, f"d{k}")

    @staticmethod
    def zero(name: str = "f") -> "ScalarFunc1":
        z = lambda u: np.zeros_like(u)
        return ScalarFunc1(z, z, z, z, name=name)

    @staticmethod
    def linear(c0: float, name: str = "f") -> "ScalarFunc1":
        return ScalarFunc1(
            lambda u: c0 * u,
            lambda u: np.full_like(u, c0),
            lambda u: np.zeros_like(u),
            lambda u: np.zeros_like(u),
            name=name,
        )


@dataclass(frozen=True)
class SpaceTimeFunc:
    """(x, y[, z], t) -> f with the partials the source corrections need."""

    value: Callable
    dx: Optional[Callable] = None
    dy: Optional[Callable] = None
    dz: Optional[Callable] = None
    dxx: Optional[Callable] = None
    dyy: Optional[Callable] = None
    dzz: Optional[Callable] = None
    dt: Optional[Callable] = None
    name: str = "f"

    def require(self, *names: str) -> None:
        for nm in names:
            if getattr(self, nm) is None:
                raise MissingDerivativeError(self.name, nm)


def exp_affine(c0: float, kx: float, ky: float, kt: float,
               kz: Optional[float] = None, name: str = "f") -> SpaceTimeFunc:
    """c0 * exp(kx*x + ky*y [+ kz*z] + kt*t) with all partials filled in.

    Every manufactured source and exact solution of the bundled linear
    problems has this form; solvers recognize it (via the ``exp_affine_coef``
    attribute) and fold the whole per-level evaluation into one array scale.
    """
    three_d = kz is not None

    if three_d:
        def make(factor):
            return lambda x, y, z, t: factor * np.exp(kx * x + ky * y + kz * z + kt * t)
    else:
        def make(factor):
            return lambda x, y, t: factor * np.exp(kx * x + ky * y + kt * t)

    f = SpaceTimeFunc(
        value=make(c0),
        dx=make(c0 * kx), dy=make(c0 * ky), dz=make(c0 * kz) if three_d else None,
        dxx=make(c0 * kx * kx), dyy=make(c0 * ky * ky),
        dzz=make(c0 * kz * kz) if three_d else None,
        dt=make(c0 * kt), name=name,
    )
    object.__setattr__(f, "exp_affine_coef", (c0, kx, ky, 0.0 if kz is None else kz, kt))
    return f


@dataclass(frozen=True)
class CoeffField:
    """(x, y) -> coefficient value with the partials scheme corrections use."""

    value: Callable
    dx: Optional[Callable] = None
    dy: Optional[Callable] = None
    dxx: Optional[Callable] = None
    dyy: Optional[Callable] = None
    name: str = "c"
    is_constant: bool = field(default=False)

    def require(self, *names: str) -> None:
        for nm in names:
            if getattr(self, nm) is None:
                raise MissingDerivativeError(self.name, nm)

    @staticmethod
    def constant(v: float, name: str = "c") -> "CoeffField":
        z = lambda x, y: np.zeros_like(x)
        return CoeffField(lambda x, y: np.full_like(x, v, dtype=float),
                          z, z, z, z, name=name, is_constant=True)

"""Symmetric, -1-homogeneous kernel functions c(x, y) driving the metric.

Three interchangeable representations:

* ``BridgeMC``: the closed-form family
  c_g(x,y) = x^-g y^-g ((x+y)/2)^(2g-1), the golden reference that
  interpolates the largest kernel (g=1) and the smallest (g=0);
* ``CanonicalMC``: the integral form
  c(x,y) = (C0/(x+y)) exp INT_0^1 ((1-u^2)/(u^2+1))
           * ((x^2+y^2)/((x+u y)(u x+y))) h(u) du;
* ``FromMonotone``: c(x,y) = 1/(y f(x/y)) for an operator monotone f.

Canonical evaluation symmetrizes its arguments up front, so symmetry
holds to the bit. ``FromMonotone`` deliberately does not: feeding it a
non-symmetric f must produce a visibly asymmetric kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .monotone import MonotoneFunction, WeightFunction
from .quadrature import DEFAULT_QUAD, QuadratureConfig, integrate

HOMOGENEITY_FACTORS = (0.1, 0.5, 2.0, 10.0)


def mc_kernel(lam, x: float, y: float):
    """Integrand ((1-u^2)/(u^2+1)) * ((x^2+y^2)/((x+u y)(u x+y)))."""
    lam = np.asarray(lam, dtype=float)
    return ((1.0 - lam * lam) / (lam * lam + 1.0)) * (
        (x * x + y * y) / ((x + lam * y) * (lam * x + y))
    )


def _weighted_mc_integral(
    h: WeightFunction, x: float, y: float, quad: QuadratureConfig
) -> float:
    live = [(lo, hi, v) for lo, hi, v in h.pieces() if v != 0.0]
    if not live:
        return 0.0
    piece_quad = replace(quad, abs_tol=quad.abs_tol / len(live))
    total = 0.0
    for lo, hi, v in live:
        val, _ = integrate(lambda lam: v * mc_kernel(lam, x, y), lo, hi, piece_quad)
        total += val
    return total


def _check_positive_pair(x: float, y: float) -> tuple[float, float]:
    x, y = float(x), float(y)
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"kernel arguments ({x}, {y}) must be positive")
    return x, y


def eval_bridge(gamma: float, x: float, y: float) -> float:
    """Closed-form family value; never touches quadrature."""
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"family parameter {gamma} outside [0,1]")
    x, y = _check_positive_pair(x, y)
    return x ** (-gamma) * y ** (-gamma) * ((x + y) / 2.0) ** (2.0 * gamma - 1.0)


def c_from_f(f: MonotoneFunction, x: float, y: float) -> float:
    """Kernel induced by an operator monotone function: 1/(y f(x/y))."""
    x, y = _check_positive_pair(x, y)
    return 1.0 / (y * f(x / y))


def eval_canonical_c(
    c0: float,
    h: WeightFunction,
    x: float,
    y: float,
    quad: QuadratureConfig = DEFAULT_QUAD,
) -> float:
    """Integral-form kernel; (x, y) is replaced by (max, min) first."""
    if not c0 > 0.0:
        raise DomainError(f"scale constant {c0} not positive")
    x, y = _check_positive_pair(x, y)
    hi, lo = (x, y) if x >= y else (y, x)
    integral = _weighted_mc_integral(h, hi, lo, quad)
    return c0 / (hi + lo) * math.exp(integral)


def normalize_C0(h: WeightFunction, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Scale giving c(1,1) = 1; explicit, no root-finding."""
    return 2.0 * math.exp(-_weighted_mc_integral(h, 1.0, 1.0, quad))


class MCFunction:
    """Base for callable kernels c(x, y)."""

    def __call__(self, x: float, y: float) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class BridgeMC(MCFunction):
    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise DomainError(f"family parameter {self.gamma} outside [0,1]")

    def __call__(self, x: float, y: float) -> float:
        return eval_bridge(self.gamma, x, y)


@dataclass(frozen=True)
class CanonicalMC(MCFunction):
    c0: float
    h: WeightFunction
    quad: QuadratureConfig = DEFAULT_QUAD

    @classmethod
    def normalized(
        cls, h: WeightFunction, quad: QuadratureConfig = DEFAULT_QUAD
    ) -> "CanonicalMC":
        return cls(c0=normalize_C0(h, quad), h=h, quad=quad)

    def __call__(self, x: float, y: float) -> float:
        return eval_canonical_c(self.c0, self.h, x, y, self.quad)


@dataclass(frozen=True)
class FromMonotone(MCFunction):
    f: MonotoneFunction

    def __call__(self, x: float, y: float) -> float:
        return c_from_f(self.f, x, y)


def default_grid(n: int = 25, lo: float = 1e-3, hi: float = 1e3) -> list[float]:
    return [float(v) for v in np.geomspace(lo, hi, n)]


def default_pair_grid(n: int = 25) -> list[tuple[float, float]]:
    axis = default_grid(n)
    return [(x, y) for x in axis for y in axis]


@dataclass(frozen=True)
class MCAxiomReport:
    """Worst residuals of the three defining properties over a grid."""

    symmetry_max: float
    homogeneity_max: float
    diagonal_max: float
    diagonal_constant: float


def check_mc_axioms(
    c: Callable[[float, float], float],
    pairs: Sequence[tuple[float, float]],
    homog_factors: Sequence[float] = HOMOGENEITY_FACTORS,
) -> MCAxiomReport:
    """Measure symmetry, -1-homogeneity and diagonal scaling residuals.

    Symmetry is reported as an absolute residual; homogeneity and the
    diagonal law c(v, v) = C/v as relative ones. The reference constant
    C is taken at c(1, 1).
    """
    sym = 0.0
    hom = 0.0
    for x, y in pairs:
        a = c(x, y)
        b = c(y, x)
        sym = max(sym, abs(a - b))
        for fac in homog_factors:
            scaled = c(fac * x, fac * y)
            hom = max(hom, abs(scaled - a / fac) / abs(a / fac))
    const = c(1.0, 1.0)
    diag = 0.0
    for v in sorted({p for pair in pairs for p in pair}):
        diag = max(diag, abs(v * c(v, v) - const) / abs(const))
    return MCAxiomReport(
        symmetry_max=sym,
        homogeneity_max=hom,
        diagonal_max=diag,
        diagonal_constant=const,
    )

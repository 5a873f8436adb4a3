"""Positive operator monotone functions on (0, oo) and their transforms.

The central object is the canonical representation

    f(t) = e^beta * (1+t)/sqrt(2)
           * exp INT_0^1 ((u^2-1)/(u^2+1)) * ((1+t^2)/((u+t)(1+u t))) h(u) du

parametrized by a real shift ``beta`` and a weight ``h: [0,1] -> [0,1]``.
Weights are kept piecewise constant, which makes the integral exact per
piece under adaptive quadrature and keeps every representation easy to
serialize. The module also provides the closed-form one-parameter family
interpolating the minimal function 2t/(1+t) and the maximal one (1+t)/2,
discrete Kubo-Ando mixtures, the sharp and tilde transforms, and the
logarithmic-coordinates view (functions monotone for the exponential
order) with its weight extension to the negative half-line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import DomainError
from .linalg import hermitian_eig, min_eigenvalue
from .quadrature import DEFAULT_QUAD, QuadratureConfig, integrate

SQRT2 = math.sqrt(2.0)

# Outside this range the argument is flipped through f(t) = t*f(1/t)
# before quadrature, keeping the integrand's peak resolvable.
EXTREME_LO = 1e-8
EXTREME_HI = 1e8


@dataclass(frozen=True)
class WeightFunction:
    """Piecewise-constant weight on [0,1] with values in [0,1].

    ``breakpoints`` has one more entry than ``values``; piece i covers
    [breakpoints[i], breakpoints[i+1]) and the last piece is closed.
    """

    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        bp = tuple(float(b) for b in self.breakpoints)
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)
        if len(bp) < 2 or len(vals) != len(bp) - 1:
            raise DomainError("need n+1 breakpoints for n piece values")
        if bp[0] != 0.0 or bp[-1] != 1.0:
            raise DomainError("breakpoints must start at 0 and end at 1")
        if any(b1 >= b2 for b1, b2 in zip(bp, bp[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if any(not (0.0 <= v <= 1.0) for v in vals):
            raise DomainError("weight values must lie in [0,1]")

    @classmethod
    def constant(cls, value: float) -> "WeightFunction":
        return cls(breakpoints=(0.0, 1.0), values=(float(value),))

    def __call__(self, lam: float) -> float:
        if not 0.0 <= lam <= 1.0:
            raise DomainError(f"weight argument {lam} outside [0,1]")
        for i in range(len(self.values)):
            if lam < self.breakpoints[i + 1]:
                return self.values[i]
        return self.values[-1]

    def pieces(self) -> Iterator[tuple[float, float, float]]:
        for i, v in enumerate(self.values):
            yield self.breakpoints[i], self.breakpoints[i + 1], v

    def blend(self, other: "WeightFunction", s: float) -> "WeightFunction":
        """Pointwise mixture s*self + (1-s)*other, s in [0,1]."""
        if not 0.0 <= s <= 1.0:
            raise DomainError(f"mixture parameter {s} outside [0,1]")
        merged = sorted(set(self.breakpoints) | set(other.breakpoints))
        vals = []
        for lo, hi in zip(merged, merged[1:]):
            mid = 0.5 * (lo + hi)
            vals.append(s * self(mid) + (1.0 - s) * other(mid))
        return WeightFunction(breakpoints=tuple(merged), values=tuple(vals))


def symmetric_kernel(lam, t: float):
    """Integrand factor ((u^2-1)/(u^2+1)) * ((1+t^2)/((u+t)(1+u t)))."""
    lam = np.asarray(lam, dtype=float)
    return ((lam * lam - 1.0) / (lam * lam + 1.0)) * (
        (1.0 + t * t) / ((lam + t) * (1.0 + lam * t))
    )


def weighted_kernel_integral(
    h: WeightFunction, t: float, quad: QuadratureConfig = DEFAULT_QUAD
) -> float:
    """INT_0^1 symmetric_kernel(u, t) h(u) du, piece by piece.

    Pieces with zero weight contribute exactly zero and are skipped.
    """
    live = [(lo, hi, v) for lo, hi, v in h.pieces() if v != 0.0]
    if not live:
        return 0.0
    piece_quad = replace(quad, abs_tol=quad.abs_tol / len(live))
    total = 0.0
    for lo, hi, v in live:
        val, _ = integrate(lambda lam: v * symmetric_kernel(lam, t), lo, hi, piece_quad)
        total += val
    return total


def eval_gamma_family(gamma: float, t: float) -> float:
    """Closed-form family t^g ((1+t)/2)^(1-2g), g in [0,1].

    g=0 is the maximal function (1+t)/2, g=1 the minimal 2t/(1+t),
    g=1/2 the square root; all normalized to f(1)=1.
    """
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"family parameter {gamma} outside [0,1]")
    if not t > 0.0:
        raise DomainError(f"argument {t} not positive")
    return t**gamma * ((1.0 + t) / 2.0) ** (1.0 - 2.0 * gamma)


def _eval_canonical_direct(
    beta: float, h: WeightFunction, t: float, quad: QuadratureConfig
) -> float:
    integral = weighted_kernel_integral(h, t, quad)
    return math.exp(beta) * (1.0 + t) / SQRT2 * math.exp(integral)


def eval_canonical_f(
    beta: float, h: WeightFunction, t: float, quad: QuadratureConfig = DEFAULT_QUAD
) -> float:
    """Evaluate the canonical (beta, h) representation at t > 0.

    Arguments outside [1e-8, 1e8] are flipped once through the symmetry
    f(t) = t*f(1/t); the flipped argument is then evaluated directly,
    never re-flipped, so the guard cannot recurse.
    """
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"argument {t} not positive")
    if t < EXTREME_LO or t > EXTREME_HI:
        return t * _eval_canonical_direct(beta, h, 1.0 / t, quad)
    return _eval_canonical_direct(beta, h, t, quad)


def closed_form_kernel_integral(t: float) -> float:
    """log(2t/(1+t)^2): the h == 1 kernel integral in closed form."""
    if not t > 0.0:
        raise DomainError(f"argument {t} not positive")
    return math.log(2.0 * t) - 2.0 * math.log1p(t)


def normalize_beta(h: WeightFunction, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Shift making the canonical representation hit f(1) = 1."""
    return -math.log(_eval_canonical_direct(0.0, h, 1.0, quad))


class MonotoneFunction:
    """A positive operator monotone function on (0, oo).

    Subclasses implement ``_value``; ``__call__`` adds the shared domain
    check. Instances are immutable and safe to share.
    """

    def _value(self, t: float) -> float:
        raise NotImplementedError

    def __call__(self, t: float) -> float:
        t = float(t)
        if not t > 0.0:
            raise DomainError(f"argument {t} not positive")
        return self._value(t)


@dataclass(frozen=True)
class GammaFamily(MonotoneFunction):
    """Member of the closed-form family; covers min, max and sqrt."""

    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise DomainError(f"family parameter {self.gamma} outside [0,1]")

    def _value(self, t: float) -> float:
        return eval_gamma_family(self.gamma, t)


@dataclass(frozen=True)
class Identity(MonotoneFunction):
    """f(t) = t. Operator monotone but not symmetric."""

    def _value(self, t: float) -> float:
        return t


@dataclass(frozen=True)
class ConstantOne(MonotoneFunction):
    """f(t) = 1. Operator monotone but not symmetric."""

    def _value(self, t: float) -> float:
        return 1.0


def minimal_function() -> MonotoneFunction:
    return GammaFamily(1.0)


def maximal_function() -> MonotoneFunction:
    return GammaFamily(0.0)


def sqrt_function() -> MonotoneFunction:
    return GammaFamily(0.5)


@dataclass(frozen=True)
class CanonicalMonotone(MonotoneFunction):
    """Canonical (beta, h) representation evaluated by quadrature."""

    beta: float
    h: WeightFunction
    quad: QuadratureConfig = DEFAULT_QUAD

    @classmethod
    def normalized(
        cls, h: WeightFunction, quad: QuadratureConfig = DEFAULT_QUAD
    ) -> "CanonicalMonotone":
        return cls(beta=normalize_beta(h, quad), h=h, quad=quad)

    def _value(self, t: float) -> float:
        return eval_canonical_f(self.beta, self.h, t, self.quad)


def eval_kubo_ando(atoms: Sequence[tuple[float, float]], t: float) -> float:
    """Discrete mixture sum w_i * t(1+s_i)/(t+s_i), s in [0, oo].

    The point at infinity contributes w*t; s=0 contributes w.
    """
    if not t > 0.0:
        raise DomainError(f"argument {t} not positive")
    total = 0.0
    for s, w in atoms:
        if not w > 0.0:
            raise DomainError(f"atom weight {w} not positive")
        if math.isinf(s):
            total += w * t
        elif s < 0.0:
            raise DomainError(f"atom location {s} negative")
        else:
            total += w * t * (1.0 + s) / (t + s)
    return total


@dataclass(frozen=True)
class KuboAndo(MonotoneFunction):
    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "atoms", tuple((float(s), float(w)) for s, w in self.atoms)
        )
        if not self.atoms:
            raise DomainError("need at least one atom")
        for s, w in self.atoms:
            if not w > 0.0:
                raise DomainError(f"atom weight {w} not positive")
            if not math.isinf(s) and s < 0.0:
                raise DomainError(f"atom location {s} negative")

    def _value(self, t: float) -> float:
        return eval_kubo_ando(self.atoms, t)


@dataclass(frozen=True)
class SharpOf(MonotoneFunction):
    """t * base(1/t); applying it twice returns to base pointwise."""

    base: MonotoneFunction

    def _value(self, t: float) -> float:
        return t * self.base(1.0 / t)


@dataclass(frozen=True)
class TildeOf(MonotoneFunction):
    """Harmonic mean of base and its sharp; always symmetric."""

    base: MonotoneFunction

    def _value(self, t: float) -> float:
        a = self.base(t)
        b = t * self.base(1.0 / t)
        return 2.0 * a * b / (a + b)


def sharp(f: MonotoneFunction) -> MonotoneFunction:
    return SharpOf(f)


def tilde(f: MonotoneFunction) -> MonotoneFunction:
    return TildeOf(f)


def check_functional_equation(
    f: Callable[[float], float], grid: Sequence[float]
) -> float:
    """Max over the grid of |f(t) - t*f(1/t)|. Zero means symmetric."""
    worst = 0.0
    for t in grid:
        t = float(t)
        if not t > 0.0:
            raise DomainError(f"grid point {t} not positive")
        worst = max(worst, abs(f(t) - t * f(1.0 / t)))
    return worst


@dataclass(frozen=True)
class ExpOrderFunction:
    """Monotone function for the exponential order, symmetric subclass.

    Stores the same (beta, h) data as the canonical multiplicative
    representation; values relate by exp(F(log t)) = f(t).
    """

    beta: float
    h: WeightFunction

    def __call__(self, x: float, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
        return eval_exp_order(self, x, quad)

    def to_monotone(self, quad: QuadratureConfig = DEFAULT_QUAD) -> CanonicalMonotone:
        return CanonicalMonotone(beta=self.beta, h=self.h, quad=quad)


# exp(x) stays inside the monotone evaluator's untransformed range
_EXP_GUARD = math.log(EXTREME_HI)


def _eval_exp_order_direct(
    F: ExpOrderFunction, x: float, quad: QuadratureConfig
) -> float:
    ex = math.exp(x)
    integral = weighted_kernel_integral(F.h, ex, quad)
    return F.beta + math.log((1.0 + ex) / SQRT2) + integral


def eval_exp_order(
    F: ExpOrderFunction, x: float, quad: QuadratureConfig = DEFAULT_QUAD
) -> float:
    """Evaluate F at any real x.

    Beyond |x| = log(1e8) the additive symmetry F(x) = x + F(-x) is
    applied once, mirroring the multiplicative-side guard.
    """
    x = float(x)
    if abs(x) > _EXP_GUARD:
        return x + _eval_exp_order_direct(F, -x, quad)
    return _eval_exp_order_direct(F, x, quad)


def to_monotone(
    F: ExpOrderFunction, quad: QuadratureConfig = DEFAULT_QUAD
) -> CanonicalMonotone:
    """Cross to the multiplicative side: t -> exp F(log t)."""
    return F.to_monotone(quad)


@dataclass(frozen=True)
class ExtendedWeight:
    """Weight extended from [0,1] to the whole half-line (-oo, 0].

    Mirror rule on [-1,0]: value at mu is h(-mu). Reciprocal rule on
    (-oo,-1): value at mu is 1 - h(1/|mu|). Together they satisfy
    ext(1/mu) + ext(mu) = 1 away from breakpoints.
    """

    h: WeightFunction

    def __call__(self, mu: float) -> float:
        if mu > 0.0:
            raise DomainError(f"extension argument {mu} positive")
        if mu >= -1.0:
            return self.h(-mu)
        return 1.0 - self.h(1.0 / -mu)

    def mirror_pieces(self) -> list[tuple[float, float, float]]:
        """Pieces covering [-1, 0], ascending."""
        return [(-hi, -lo, v) for lo, hi, v in reversed(list(self.h.pieces()))]

    def far_pieces(self) -> list[tuple[float, float, float]]:
        """Pieces covering (-oo, -1], ascending; first lo is -inf."""
        out = []
        for lo, hi, v in self.h.pieces():
            left = -math.inf if lo == 0.0 else -1.0 / lo
            out.append((left, -1.0 / hi, 1.0 - v))
        return out


def extend_weight(h: WeightFunction) -> ExtendedWeight:
    return ExtendedWeight(h)


@dataclass(frozen=True)
class OperatorMonotoneReport:
    """Outcome of matrix-order sampling for one candidate function."""

    worst: float
    passed: bool
    trials: int
    dims: tuple[int, ...]
    seed: int
    tol: float
    worst_trial: int
    worst_dim: int


def _ordered_pair(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Sample 0 < A <= B via Gram matrices: A = 0.05 I + G*G, B = A + H*H."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = 0.05 * np.eye(n) + g.conj().T @ g
    b = a + h.conj().T @ h
    return a, b


def check_operator_monotone(
    f: Callable[[float], float],
    trials: int,
    dims: Sequence[int],
    seed: int,
    tol: float = 1e-9,
) -> OperatorMonotoneReport:
    """Sample ordered pairs A <= B and test f(A) <= f(B) spectrally.

    Per-trial generators are derived from (seed, trial index), so any
    single trial can be reproduced in isolation. The report carries the
    most negative eigenvalue of f(B) - f(A) seen and where it occurred.
    """
    if trials < 1:
        raise DomainError("need at least one trial")
    dims = tuple(int(d) for d in dims)
    if any(not 2 <= d <= 8 for d in dims):
        raise DomainError("dims must lie in [2, 8]")
    worst = math.inf
    worst_trial = -1
    worst_dim = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        n = dims[trial % len(dims)]
        a, b = _ordered_pair(rng, n)
        dec_a = hermitian_eig(a)
        dec_b = hermitian_eig(b)
        fa = (dec_a.eigenvectors * [f(w) for w in dec_a.eigenvalues]) @ (
            dec_a.eigenvectors.conj().T
        )
        fb = (dec_b.eigenvectors * [f(w) for w in dec_b.eigenvalues]) @ (
            dec_b.eigenvectors.conj().T
        )
        gap = min_eigenvalue(fb - fa)
        if gap < worst:
            worst, worst_trial, worst_dim = gap, trial, n
    return OperatorMonotoneReport(
        worst=worst,
        passed=worst >= -tol,
        trials=trials,
        dims=dims,
        seed=seed,
        tol=tol,
        worst_trial=worst_trial,
        worst_dim=worst_dim,
    )

"""Levy exponent families and their compressibility predictions.

Each supported white-noise family is described by its log-characteristic
function psi (the Levy exponent of the underlying infinitely divisible
marginal law) together with its growth indices (beta, beta'), which govern
how fast the n-term wavelet approximation error of a driven process decays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

__all__ = [
    "ParameterError",
    "GaussianJump",
    "UniformJump",
    "DiracJump",
    "JumpDistribution",
    "Gaussian",
    "SAlphaS",
    "CompoundPoisson",
    "Laplace",
    "InverseGaussian",
    "LevyExponent",
    "BGIndices",
    "KappaPrediction",
    "psi_eval",
    "bg_indices",
    "theoretical_kappa",
    "check_besov_membership_prediction",
]


class ParameterError(ValueError):
    """A distribution or model parameter is outside its admissible domain."""


# ---------------------------------------------------------------------------
# jump laws for compound Poisson noise


@dataclass(frozen=True)
class GaussianJump:
    """Centered normal jump with standard deviation sigma."""

    sigma: float = 1.0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ParameterError(f"jump sigma must be positive, got {self.sigma}")

    def char_fn(self, xi):
        xi = np.asarray(xi, dtype=float)
        return np.exp(-0.5 * (self.sigma * xi) ** 2).astype(complex)

    def sample(self, rng, n):
        return rng.normal(0.0, self.sigma, n)


@dataclass(frozen=True)
class UniformJump:
    """Uniform jump on the interval [a, b]."""

    a: float = -1.0
    b: float = 1.0

    def __post_init__(self):
        if not self.a < self.b:
            raise ParameterError(f"uniform jump needs a < b, got [{self.a}, {self.b}]")

    def char_fn(self, xi):
        xi = np.asarray(xi, dtype=float)
        mid = 0.5 * (self.a + self.b)
        half = 0.5 * (self.b - self.a)
        # sin(half*xi)/(half*xi) with the removable singularity at 0
        return np.exp(1j * mid * xi) * np.sinc(half * xi / np.pi)

    def sample(self, rng, n):
        return rng.uniform(self.a, self.b, n)


@dataclass(frozen=True)
class DiracJump:
    """Deterministic jump of size c."""

    c: float = 1.0

    def char_fn(self, xi):
        xi = np.asarray(xi, dtype=float)
        return np.exp(1j * self.c * xi)

    def sample(self, rng, n):
        return np.full(n, float(self.c))


JumpDistribution = Union[GaussianJump, UniformJump, DiracJump]


# ---------------------------------------------------------------------------
# index pair and noise families


@dataclass(frozen=True)
class BGIndices:
    """Growth indices of |psi| at infinity, 0 <= beta_prime <= beta <= 2."""

    beta: float
    beta_prime: float

    def __post_init__(self):
        if not (0.0 <= self.beta_prime <= self.beta <= 2.0):
            raise ParameterError(
                f"indices must satisfy 0 <= beta' <= beta <= 2, got "
                f"beta={self.beta}, beta'={self.beta_prime}"
            )


@dataclass(frozen=True)
class Gaussian:
    """Gaussian white noise, psi(xi) = -sigma2 * xi^2 / 2."""

    sigma2: float = 1.0
    family_name: ClassVar[str] = "gaussian"
    is_gaussian: ClassVar[bool] = True

    def __post_init__(self):
        if not self.sigma2 > 0:
            raise ParameterError(f"sigma2 must be positive, got {self.sigma2}")

    def psi(self, xi):
        xi = np.asarray(xi, dtype=float)
        return (-0.5 * self.sigma2 * xi**2).astype(complex)

    def indices(self):
        return BGIndices(2.0, 2.0)


@dataclass(frozen=True)
class SAlphaS:
    """Symmetric alpha-stable noise, psi(xi) = -|xi|^alpha, 0 < alpha < 2."""

    alpha: float
    family_name: ClassVar[str] = "sas"
    is_gaussian: ClassVar[bool] = False

    def __post_init__(self):
        if not 0.0 < self.alpha < 2.0:
            raise ParameterError(f"alpha must lie in (0, 2), got {self.alpha}")

    def psi(self, xi):
        xi = np.asarray(xi, dtype=float)
        return (-np.abs(xi) ** self.alpha).astype(complex)

    def indices(self):
        return BGIndices(self.alpha, self.alpha)


@dataclass(frozen=True)
class CompoundPoisson:
    """Compound Poisson noise with jump rate per unit volume and a jump law.

    psi(xi) = rate * (jump characteristic function(xi) - 1).
    """

    rate: float = 1.0
    jumps: JumpDistribution = GaussianJump()
    family_name: ClassVar[str] = "compound_poisson"
    is_gaussian: ClassVar[bool] = False

    def __post_init__(self):
        if not self.rate > 0:
            raise ParameterError(f"rate must be positive, got {self.rate}")

    def psi(self, xi):
        return self.rate * (self.jumps.char_fn(xi) - 1.0)

    def indices(self):
        return BGIndices(0.0, 0.0)


@dataclass(frozen=True)
class Laplace:
    """Laplace noise, psi(xi) = -log(1 + xi^2)."""

    family_name: ClassVar[str] = "laplace"
    is_gaussian: ClassVar[bool] = False

    def psi(self, xi):
        xi = np.asarray(xi, dtype=float)
        return (-np.log1p(xi**2)).astype(complex)

    def indices(self):
        return BGIndices(0.0, 0.0)


@dataclass(frozen=True)
class InverseGaussian:
    """Inverse Gaussian subordinator noise.

    psi(xi) = delta * (ig_gamma - sqrt(ig_gamma^2 - 2i*xi)) with the
    principal square root; |psi| grows like sqrt(|xi|).
    """

    delta: float = 1.0
    ig_gamma: float = 1.0
    family_name: ClassVar[str] = "inverse_gaussian"
    is_gaussian: ClassVar[bool] = False

    def __post_init__(self):
        if not (self.delta > 0 and self.ig_gamma > 0):
            raise ParameterError(
                f"delta and ig_gamma must be positive, got "
                f"delta={self.delta}, ig_gamma={self.ig_gamma}"
            )

    def psi(self, xi):
        xi = np.asarray(xi, dtype=float)
        g = self.ig_gamma
        val = self.delta * (g - np.sqrt(g * g - 2j * xi))
        # force the defining identity psi(0) = 0 against sqrt round-off
        return np.where(xi == 0.0, 0.0 + 0.0j, val)

    def indices(self):
        return BGIndices(0.5, 0.5)


LevyExponent = Union[Gaussian, SAlphaS, CompoundPoisson, Laplace, InverseGaussian]


def psi_eval(exponent: LevyExponent, xi):
    """Evaluate the Levy exponent; scalar in gives complex out, arrays pass through."""
    out = exponent.psi(np.asarray(xi, dtype=float))
    if np.ndim(xi) == 0:
        return complex(out)
    return out


def bg_indices(exponent: LevyExponent) -> BGIndices:
    """Growth indices (beta, beta') of the family; equal for all supported families."""
    return exponent.indices()


# ---------------------------------------------------------------------------
# compressibility predictions


@dataclass(frozen=True)
class KappaPrediction:
    """Predicted n-term decay exponent for a driven process.

    kind is "exact", "bounds", or "infinite"; it is None when the
    admissibility inequality for the prediction does not hold, in which
    case no value is attached.
    """

    kind: str | None
    value: float | None = None
    lower: float | None = None
    upper: float | None = None
    condition_satisfied: bool = True

    def __post_init__(self):
        if self.kind not in ("exact", "bounds", "infinite", None):
            raise ParameterError(f"unknown prediction kind {self.kind!r}")
        if self.kind == "bounds" and not self.lower <= self.upper:
            raise ParameterError(
                f"bounds must be ordered, got [{self.lower}, {self.upper}]"
            )

    def sort_key(self) -> float:
        """Scalar usable to order families by predicted compressibility."""
        if self.kind == "exact":
            return self.value
        if self.kind == "bounds":
            return self.lower
        if self.kind == "infinite":
            return math.inf
        return math.nan

    def describe(self) -> str:
        if self.kind == "exact":
            return f"exact {self.value:.6g}"
        if self.kind == "bounds":
            return f"bounds [{self.lower:.6g}, {self.upper:.6g}]"
        if self.kind == "infinite":
            return "infinite (faster than any polynomial)"
        return "no prediction (admissibility condition not met)"


def theoretical_kappa(
    exponent: LevyExponent,
    gamma: float,
    d: int,
    p0: float = 2.0,
    tau0: float = 0.0,
) -> KappaPrediction:
    """Predicted decay exponent of the n-term error for s solving Ls = w.

    Gaussian noise: exact value (gamma - tau0)/d - 1/2, valid when
    gamma > tau0 + d/2.  Non-Gaussian noise with indices (beta, beta'):
    valid when gamma > tau0 + d - d/p0; infinite when beta = 0, otherwise
    bounded between (gamma - tau0)/d + 1/beta - 1 and the same with beta'.
    p0 may be math.inf, meaning 1/p0 = 0 in the condition.
    """
    if not gamma > 0:
        raise ParameterError(f"gamma must be positive, got {gamma}")
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    if not p0 > 0:
        raise ParameterError(f"p0 must be positive, got {p0}")

    if exponent.is_gaussian:
        if not gamma > tau0 + d / 2.0:
            return KappaPrediction(kind=None, condition_satisfied=False)
        return KappaPrediction("exact", value=(gamma - tau0) / d - 0.5)

    if not gamma > tau0 + d - d / p0:
        return KappaPrediction(kind=None, condition_satisfied=False)
    idx = exponent.indices()
    if idx.beta == 0.0:
        return KappaPrediction("infinite")
    return KappaPrediction(
        "bounds",
        lower=(gamma - tau0) / d + 1.0 / idx.beta - 1.0,
        upper=(gamma - tau0) / d + 1.0 / idx.beta_prime - 1.0,
    )


def check_besov_membership_prediction(
    exponent: LevyExponent,
    gamma: float,
    d: int,
    p: float,
    tau: float,
) -> str:
    """Almost-sure smoothness-space membership of s = L^{-1} w.

    Returns "in" when tau is below the positive threshold, "out" when it is
    above the negative threshold, and "critical" between or exactly on one.
    """
    if not p > 0:
        raise ParameterError(f"p must be positive, got {p}")
    if exponent.is_gaussian:
        t_in = t_out = gamma - d / 2.0
    else:
        idx = exponent.indices()
        t_in = gamma + d * (1.0 / max(p, idx.beta) - 1.0)
        t_out = gamma + d * (1.0 / max(p, idx.beta_prime) - 1.0)
    if tau < t_in:
        return "in"
    if tau > t_out:
        return "out"
    return "critical"

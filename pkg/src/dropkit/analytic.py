"""Closed-form ball quantities and the explicit mass thresholds.

The critical mass m* is the volume at which one ball has the same energy
as two balls of half its volume placed infinitely far apart:

    m* = ( (2^{1/N} - 1) / (1 - 2^{(lam-N)/N}) * Per B_1 / D(B_1) )^{N/(N+1-lam)} |B_1|

For N=3, lam=1 this is 5 (2^{1/3}-1)/(1-2^{-2/3}) ~ 3.512.

D(B_1) has no closed form used here; the deterministic route reduces the
double integral to a 1-D integral against the known distance density of
two uniform points in a ball, and Monte Carlo serves as the independent
oracle (pinned against 16 pi^2 / 15 for N=3, lam=1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import betainc

from .core import (
    EnergyBreakdown,
    RieszParams,
    check_mass,
    unit_ball_volume,
    unit_sphere_area,
)

RIESZ_SELF_METHODS = ("radial_quadrature", "monte_carlo")


@dataclass(frozen=True)
class BallConstants:
    """Unit-ball volume, surface area and Riesz self-energy D(B_1)."""

    volume: float
    surface: float
    riesz_self: float
    riesz_self_method: str
    riesz_self_stderr: float = 0.0

    def __post_init__(self):
        if min(self.volume, self.surface, self.riesz_self) <= 0:
            raise ValueError("volume, surface and riesz_self must all be positive")
        if self.riesz_self_method not in RIESZ_SELF_METHODS + ("analytic",):
            raise ValueError(f"unknown riesz_self method {self.riesz_self_method!r}")
        if self.riesz_self_stderr < 0:
            raise ValueError("stderr must be >= 0")


def ball_distance_pdf(N: int, r):
    """Density of |X - Y| for X, Y i.i.d. uniform in the unit ball of R^N.

    p(r) = N r^{N-1} I_{1 - r^2/4}((N+1)/2, 1/2) on 0 <= r <= 2, with I the
    regularized incomplete beta function.
    """
    r = np.asarray(r, dtype=float)
    x = np.clip(1.0 - 0.25 * r * r, 0.0, 1.0)
    return N * r ** (N - 1) * betainc((N + 1) / 2.0, 0.5, x)


def ball_riesz_self_energy(
    params: RieszParams,
    method: str = "radial_quadrature",
    budget: int = 400,
    seed: int = 0,
) -> tuple[float, float]:
    """Estimate D(B_1) = (1/2) \iint_{B_1 x B_1} |x-y|^{-lam} dx dy.

    radial_quadrature: Gauss-Legendre on the 1-D pair-distance integral,
    with the substitution r = 2 u^{1/(N-lam)} absorbing the r^{N-1-lam}
    factor so the transformed integrand is bounded; budget = node count,
    stderr = 0.

    monte_carlo: averages |X-Y|^{-lam} over budget i.i.d. uniform pairs
    and multiplies by |B_1|^2 / 2; returns the sample standard error.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    N, lam = params.dimension, params.exponent
    wN = unit_ball_volume(N)

    if method == "radial_quadrature":
        u, w = np.polynomial.legendre.leggauss(int(budget))
        u = 0.5 * (u + 1.0)
        w = 0.5 * w
        # r^{-lam} p(r) dr -> N 2^{N-lam}/(N-lam) I_{1-r^2/4}((N+1)/2, 1/2) du
        r = 2.0 * u ** (1.0 / (N - lam))
        x = np.clip(1.0 - 0.25 * r * r, 0.0, 1.0)
        integrand = N * 2.0 ** (N - lam) / (N - lam) * betainc((N + 1) / 2.0, 0.5, x)
        value = 0.5 * wN**2 * float(np.sum(w * integrand))
        if not math.isfinite(value):
            raise ArithmeticError("non-finite accumulation in radial quadrature")
        return value, 0.0

    if method == "monte_carlo":
        rng = np.random.default_rng(seed)
        n = int(budget)
        chunk = 2_000_000
        count = 0
        acc = 0.0
        acc2 = 0.0
        while count < n:
            k = min(chunk, n - count)
            X = sample_unit_ball(rng, N, k)
            Y = sample_unit_ball(rng, N, k)
            d = np.linalg.norm(X - Y, axis=1)
            v = d**-lam
            acc += float(v.sum())
            acc2 += float((v * v).sum())
            count += k
        mean = acc / n
        var = max(acc2 / n - mean * mean, 0.0)
        scale = 0.5 * wN**2
        value = scale * mean
        stderr = scale * math.sqrt(var / n)
        if not math.isfinite(value):
            raise ArithmeticError("non-finite accumulation in Monte Carlo")
        return value, stderr

    raise ValueError(f"unknown method {method!r}")


def sample_unit_ball(rng: np.random.Generator, N: int, n: int) -> np.ndarray:
    """n uniform points in the unit ball of R^N (normal direction + radius)."""
    X = rng.standard_normal((n, N))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    R = rng.random(n) ** (1.0 / N)
    return X * R[:, None]


def ball_constants(
    params: RieszParams,
    method: str = "radial_quadrature",
    budget: int = 400,
    seed: int = 0,
) -> BallConstants:
    """Assemble BallConstants for the given parameters."""
    value, stderr = ball_riesz_self_energy(params, method=method, budget=budget, seed=seed)
    return BallConstants(
        volume=unit_ball_volume(params.dimension),
        surface=unit_sphere_area(params.dimension),
        riesz_self=value,
        riesz_self_method=method,
        riesz_self_stderr=stderr,
    )


def ball_energy(params: RieszParams, m: float, constants: BallConstants) -> EnergyBreakdown:
    """Energy of the ball of volume m: the variational upper bound for E(m)."""
    m = check_mass(m)
    t = m / constants.volume
    return EnergyBreakdown(
        perimeter=t ** params.perimeter_exp * constants.surface,
        riesz=t ** params.riesz_exp * constants.riesz_self,
    )


def critical_mass(params: RieszParams, constants: BallConstants) -> float:
    """The explicit critical mass m* (one ball vs two half-balls crossing)."""
    N, lam = params.dimension, params.exponent
    ratio = (2.0 ** (1.0 / N) - 1.0) / (1.0 - 2.0 ** ((lam - N) / N))
    return (ratio * constants.surface / constants.riesz_self) ** (
        N / (N + 1.0 - lam)
    ) * constants.volume


def crossing_mass(params: RieszParams, constants: BallConstants) -> float:
    """m* recomputed as the root of E_ball(m) - 2 E_ball(m/2).

    Independent of the closed formula: the excess changes sign exactly
    once (the perimeter deficit is a fixed negative power of m relative
    to the riesz gain), so a doubling bracket plus Brent iteration finds
    the same number, cross-validating critical_mass.
    """

    def excess(m):
        return (
            ball_energy(params, m, constants).total
            - 2.0 * ball_energy(params, 0.5 * m, constants).total
        )

    m_lo = constants.volume
    # below m*: one ball is strictly better, excess < 0
    while excess(m_lo) >= 0.0:
        m_lo *= 0.5
        if m_lo < 1e-12:
            raise RuntimeError("bracket failure on the low side (formula bug)")
    m_hi = m_lo
    while excess(m_hi) <= 0.0:
        m_hi *= 2.0
        if m_hi > 1e12:
            raise RuntimeError("bracket failure on the high side (formula bug)")
    return brentq(excess, m_lo, m_hi, xtol=1e-13, rtol=8.9e-16)


def conditional_threshold(params: RieszParams, constants: BallConstants, delta: float) -> float:
    """Conditional binding threshold m* (1-delta)^{-N/(N+1-lam)} > m*."""
    if not (0.0 < delta < 1.0):
        raise ValueError(f"delta must be in (0, 1), got {delta!r}")
    N, lam = params.dimension, params.exponent
    return critical_mass(params, constants) * (1.0 - delta) ** (-N / (N + 1.0 - lam))

"""Problem parameters, energy bookkeeping and the exact mass-scaling law.

The energy of a set Omega in R^N is

    E(Omega) = Per(Omega) + D(Omega),
    D(Omega) = (1/2) \iint_{Omega x Omega} |x - y|^{-lam} dx dy,

minimized over |Omega| = m.  Everything downstream (ball constants,
binding inequalities, split comparisons) is driven by how the two terms
scale when a unit-volume configuration is dilated to volume m:

    E(m^{1/N} U) = m^{(N-1)/N} Per(U) + m^{(2N-lam)/N} D(U).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class UnsupportedRegimeError(Exception):
    """Raised where no computable bound exists (1 < lam <= 2 mass bound)."""


@dataclass(frozen=True)
class RieszParams:
    """Ambient problem parameters: dimension N >= 2 and Riesz exponent lam in (0, N)."""

    dimension: int
    exponent: float

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.dimension!r}")
        if not (0.0 < self.exponent < self.dimension):
            raise ValueError(
                f"lambda must be in (0, {self.dimension}), got {self.exponent!r}"
            )

    @property
    def perimeter_exp(self) -> float:
        """Mass exponent of the perimeter term, (N-1)/N."""
        return (self.dimension - 1) / self.dimension

    @property
    def riesz_exp(self) -> float:
        """Mass exponent of the Riesz term, (2N-lam)/N."""
        return (2 * self.dimension - self.exponent) / self.dimension

    @property
    def gap_exp(self) -> float:
        """Difference of the two exponents, (N+1-lam)/N > 0."""
        return (self.dimension + 1 - self.exponent) / self.dimension


@dataclass(frozen=True)
class EnergyBreakdown:
    """Perimeter part, Riesz part and their sum for one configuration."""

    perimeter: float
    riesz: float

    def __post_init__(self):
        if self.perimeter < 0 or self.riesz < 0:
            raise ValueError("perimeter and riesz parts must be nonnegative")

    @property
    def total(self) -> float:
        return self.perimeter + self.riesz


def check_mass(m: float) -> float:
    """Validate a volume/mass argument (strictly positive)."""
    m = float(m)
    if not (m > 0.0) or not math.isfinite(m):
        raise ValueError(f"mass must be finite and > 0, got {m!r}")
    return m


def unit_ball_volume(N: int) -> float:
    """Volume of the unit ball in R^N, pi^{N/2} / Gamma(N/2 + 1).

    Computed by the half-integer recursion w_N = (2 pi / N) w_{N-2},
    which is exact for integer N.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be an integer >= 1, got {N!r}")
    vol = 2.0 if N % 2 else 1.0  # w_1 = 2, w_0 = 1
    for k in range(N % 2 + 2, N + 1, 2):
        vol *= 2.0 * math.pi / k
    return vol


def unit_sphere_area(N: int) -> float:
    """Surface area of the unit sphere in R^N: Per B_1 = N * w_N."""
    if not isinstance(N, int) or N < 2:
        raise ValueError(f"N must be an integer >= 2, got {N!r}")
    return N * unit_ball_volume(N)


def energy_scale(unit_breakdown: EnergyBreakdown, params: RieszParams, m: float) -> EnergyBreakdown:
    """Scale the energy of a unit-volume configuration to volume m.

    Exact power law, no quadrature: the perimeter part picks up
    m^{(N-1)/N}, the Riesz part m^{(2N-lam)/N}.
    """
    m = check_mass(m)
    return EnergyBreakdown(
        perimeter=m ** params.perimeter_exp * unit_breakdown.perimeter,
        riesz=m ** params.riesz_exp * unit_breakdown.riesz,
    )

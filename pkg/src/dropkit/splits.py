"""Multi-ball splits at infinite separation and the nonexistence diagnostics.

Splitting a mass m into k balls pushed infinitely far apart costs
k * E_ball(m/k): the cross interaction vanishes in the separation limit,
so no finite-distance tuning parameter appears.  The necessary-condition
diagnostic converts directional slicing into a distance moment via the
angular constant

    c_N = average over the unit sphere of (nu . e)_+ = |S^{N-2}| / ((N-1) |S^{N-1}|),

and any minimizer must satisfy (c_N/2) \iint |x-y|^{1-lam} <= |Omega|.
For lam <= 1 this yields an explicit mass bound; for 1 < lam <= 2 the
chain runs through a nonconstructive structure constant and no numeric
bound is emitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import BallConstants, ball_energy
from .core import RieszParams, UnsupportedRegimeError, check_mass, unit_sphere_area
from .quadrature import moment_integral
from .shapes import GridShape


@dataclass
class SplitReport:
    params: RieszParams
    m: float
    energies_by_k: list[tuple[int, float]]
    best_k: int
    best_total: float


@dataclass
class NecessaryConditionReport:
    moment: float
    measure: float
    c_N: float
    bound: float  # 2 measure / c_N
    satisfied: bool
    margin: float  # bound - moment


def split_energy(
    params: RieszParams, constants: BallConstants, m: float, k: int
) -> float:
    """Energy of k equal balls of total mass m at infinite separation."""
    m = check_mass(m)
    if k < 1:
        raise ValueError("k must be >= 1")
    return k * ball_energy(params, m / k, constants).total


def best_split(
    params: RieszParams, constants: BallConstants, m: float, k_max: int
) -> SplitReport:
    """Exhaustive k-scan of the split comparison; ties break toward smaller k."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    energies = [(k, split_energy(params, constants, m, k)) for k in range(1, k_max + 1)]
    best_k, best_total = min(energies, key=lambda kt: (kt[1], kt[0]))
    return SplitReport(params, m, energies, best_k, best_total)


def angular_constant(N: int, quad_nodes: int = 200) -> float:
    """c_N via the polar quadrature |S^{N-2}| int_0^{pi/2} cos t sin^{N-2} t dt / |S^{N-1}|,
    cross-checked against the closed reduction |S^{N-2}| / ((N-1) |S^{N-1}|)."""
    if N < 2:
        raise ValueError("N must be >= 2")
    if quad_nodes < 8:
        raise ValueError("quad_nodes must be >= 8")
    sphere_Nm1 = unit_sphere_area(N)
    sphere_Nm2 = 2.0 if N == 2 else unit_sphere_area(N - 1)  # |S^0| = 2
    t, w = np.polynomial.legendre.leggauss(quad_nodes)
    t = 0.25 * math.pi * (t + 1.0)
    w = 0.25 * math.pi * w
    integral = float(np.sum(w * np.cos(t) * np.sin(t) ** (N - 2)))
    value = sphere_Nm2 * integral / sphere_Nm1
    closed = sphere_Nm2 / ((N - 1) * sphere_Nm1)
    if abs(value - closed) > 1e-9 * closed:
        raise AssertionError(
            f"quadrature c_N disagrees with the closed reduction: {value} vs {closed}"
        )
    return value


def necessary_condition(g: GridShape, params: RieszParams) -> NecessaryConditionReport:
    """Slicing necessary condition for minimality of a rasterized shape.

    satisfied = False certifies the shape cannot be a minimizer at its
    mass; satisfied = True proves nothing.
    """
    lam = params.exponent
    if params.dimension != g.dimension:
        raise ValueError("shape dimension does not match params")
    c_N = angular_constant(params.dimension)
    moment = moment_integral(g, 1.0 - lam)
    measure = g.measure
    bound = 2.0 * measure / c_N
    margin = bound - moment
    return NecessaryConditionReport(moment, measure, c_N, bound, margin >= 0.0, margin)


def nonexistence_mass_bound(
    params: RieszParams, constants: BallConstants, ball_moment_unit: float | None = None
) -> float:
    """Upper bound on the mass of any minimizer, for lam <= 1.

    lam = 1: the slicing condition reads m^2 <= (2/c_N) m, giving 2/c_N.
    lam < 1: the rearrangement direction bounds the moment below by its
    ball value, so the condition pins m at
    w_N (2 w_N / (c_N * ball_moment_unit))^{N/(N+1-lam)}, where
    ball_moment_unit = \iint_{B_1 x B_1} |x-y|^{1-lam}.
    lam > 1: unsupported (nonconstructive structure-lemma constant).
    """
    N, lam = params.dimension, params.exponent
    c_N = angular_constant(N)
    if lam == 1.0:
        return 2.0 / c_N
    if lam < 1.0:
        if ball_moment_unit is None or ball_moment_unit <= 0.0:
            raise ValueError("lam < 1 requires a positive ball_moment_unit")
        wN = constants.volume
        return wN * (2.0 * wN / (c_N * ball_moment_unit)) ** (N / (N + 1.0 - lam))
    raise UnsupportedRegimeError(
        "no computable bound for 1 < lambda <= 2: the diameter chain relies on a "
        "density lower bound with a nonconstructive constant"
    )

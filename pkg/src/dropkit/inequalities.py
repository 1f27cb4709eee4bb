"""Scalar inequalities behind strict binding: f(s), g(s), h(s) and the deficit bound.

The strict binding inequality E(m) < E(m1) + E(m - m1) for m < m* reduces
to a family of one-variable inequalities in the split fraction s = m1/m.
Everything here is a closed-form scalar, checked on dense endpoint-free
grids with tolerance TOL_G (double precision on O(1) quantities).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .analytic import BallConstants, ball_energy, critical_mass
from .core import RieszParams, check_mass

TOL_G = 1e-12

# floor for s in h_alpha: keeps s^{alpha-1} finite (large negative h) for alpha < 1
_S_FLOOR = 1e-300


def open_grid(grid_size: int) -> np.ndarray:
    """Endpoint-free grid s_i = i/(G+1), i = 1..G, symmetric about 1/2."""
    if grid_size < 1:
        raise ValueError("grid_size must be >= 1")
    return np.arange(1, grid_size + 1, dtype=float) / (grid_size + 1)


@dataclass
class BindingReport:
    params: RieszParams
    m: float
    s_grid: np.ndarray
    deficit_lb: np.ndarray
    min_deficit: float
    argmin_s: float
    verdict: str  # "strict_binding_certified" | "inconclusive"


@dataclass
class LemmaGReport:
    alpha: float
    s_grid: np.ndarray
    g_values: np.ndarray
    min_g: float
    h_sign_change: float  # estimated s1, nan when alpha == 1
    passed: bool


def f_of_s(params: RieszParams, s):
    """f(s) = (s^{(N-1)/N} + (1-s)^{(N-1)/N} - 1) / (1 - s^{(2N-lam)/N} - (1-s)^{(2N-lam)/N}).

    The denominator is strictly positive on (0,1) because the exponent
    (2N-lam)/N exceeds 1; asserted at runtime.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0) or np.any(s >= 1.0):
        raise ValueError("s must lie in (0, 1)")
    a = params.perimeter_exp
    b = params.riesz_exp
    num = s**a + (1.0 - s) ** a - 1.0
    den = 1.0 - s**b - (1.0 - s) ** b
    if np.any(den <= 0.0):
        raise AssertionError("nonpositive denominator in f(s): formula bug")
    out = num / den
    return float(out) if out.ndim == 0 else out


def f_half_closed_form(params: RieszParams) -> float:
    """f(1/2) = (2^{1/N} - 1) / (1 - 2^{(lam-N)/N}), the minimum of f."""
    N, lam = params.dimension, params.exponent
    return (2.0 ** (1.0 / N) - 1.0) / (1.0 - 2.0 ** ((lam - N) / N))


def f_min_certify(
    params: RieszParams, grid_size: int, tol: float = 1e-10
) -> tuple[float, float, bool]:
    """Dense-scan certificate that min f = f(1/2).

    Returns (grid minimum, argmin, matches_closed_form).  The grid is the
    endpoint-free open_grid; when G+1 is even it contains 1/2 exactly.
    """
    if grid_size < 3:
        raise ValueError("grid_size must be >= 3")
    s = open_grid(grid_size)
    vals = f_of_s(params, s)
    i = int(np.argmin(vals))
    cell = 1.0 / (grid_size + 1)
    matches = abs(vals[i] - f_half_closed_form(params)) <= tol and abs(s[i] - 0.5) <= cell
    return float(vals[i]), float(s[i]), bool(matches)


def g_alpha(alpha: float, s):
    """g(s) = s^a + (1-s)^a - 1 + ((2^{1-a}-1)/log 2)(s log s + (1-s) log(1-s)).

    Nonnegative on (0,1) for every alpha in (0,2); this is the two-sided
    entropy comparison that pins down the minimum of f at s = 1/2.
    Uses the continuous extension 0 log 0 = 0 at boundary evaluations.
    """
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"alpha must be in (0, 2), got {alpha!r}")
    s = np.asarray(s, dtype=float)
    t = 1.0 - s
    with np.errstate(divide="ignore", invalid="ignore"):
        ent = np.where(s > 0.0, s * np.log(s), 0.0) + np.where(t > 0.0, t * np.log(t), 0.0)
    out = s**alpha + t**alpha - 1.0 + (2.0 ** (1.0 - alpha) - 1.0) / math.log(2.0) * ent
    return float(out) if out.ndim == 0 else out


def h_alpha(alpha: float, s):
    """h(s) = s(1-s) g''(s) in closed form,

        a(a-1)(s^{a-1} + (1-s)^{a-1} - s^a - (1-s)^a) + (2^{1-a}-1)/log 2.

    Strictly increasing on (0, 1/2] with exactly one sign change; alpha=1
    is excluded (the inequality is trivial there).  For alpha < 1 the
    value diverges to -inf as s -> 0; s is clamped to keep the result a
    finite (large negative) double.
    """
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"alpha must be in (0, 2), got {alpha!r}")
    if alpha == 1.0:
        raise ValueError("alpha = 1 is excluded (trivial case)")
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0) or np.any(s > 0.5):
        raise ValueError("s must lie in (0, 1/2]")
    s = np.maximum(s, _S_FLOOR)
    t = 1.0 - s
    out = alpha * (alpha - 1.0) * (
        s ** (alpha - 1.0) + t ** (alpha - 1.0) - s**alpha - t**alpha
    ) + (2.0 ** (1.0 - alpha) - 1.0) / math.log(2.0)
    return float(out) if out.ndim == 0 else out


def lemma_g_verify(alpha: float, grid_size: int, tol_g: float = TOL_G) -> LemmaGReport:
    """Grid certificate for g >= 0, with the h-monotonicity side checks.

    Verifies min g >= -tol_g on the open grid, that h is increasing on
    (0, 1/2] (consecutive differences > -tol_g) with exactly one sign
    change, and locates that sign change s1.  alpha = 1 short-circuits to
    trivially passed (g vanishes identically).
    """
    if not (0.0 < alpha < 2.0):
        raise ValueError(f"alpha must be in (0, 2), got {alpha!r}")
    if grid_size < 100:
        raise ValueError("grid_size must be >= 100")
    s = open_grid(grid_size)
    g = g_alpha(alpha, s)
    min_g = float(np.min(g))

    if alpha == 1.0:
        return LemmaGReport(alpha, s, g, min_g, math.nan, True)

    s_half = s[s <= 0.5]
    h = h_alpha(alpha, s_half)
    increasing = bool(np.all(np.diff(h) > -tol_g))
    signs = np.sign(h)
    flips = np.nonzero(np.diff(signs) > 0)[0]
    one_flip = len(flips) == 1 and h[0] < 0.0 < h[-1]
    s1 = float(0.5 * (s_half[flips[0]] + s_half[flips[0] + 1])) if len(flips) else math.nan
    passed = min_g >= -tol_g and increasing and one_flip
    return LemmaGReport(alpha, s, g, min_g, s1, passed)


def binding_lower_bound(
    params: RieszParams, m: float, s: float, E_m: float, constants: BallConstants
):
    """Dilation lower bound for E(s m) given any upper estimate E_m of E(m):

        E(m1) >= s^{(2N-lam)/N} E_m
                 + (1 - s^{(N+1-lam)/N}) s^{(N-1)/N} (m/|B_1|)^{(N-1)/N} Per B_1.

    E_m is caller-supplied so the same bound serves the (1-delta)-weighted
    variant used by the conditional threshold (pass constants with a
    scaled riesz_self).
    """
    m = check_mass(m)
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0) or np.any(s >= 1.0):
        raise ValueError("s must lie in (0, 1)")
    p_exp = params.perimeter_exp
    per_m = (m / constants.volume) ** p_exp * constants.surface
    out = s**params.riesz_exp * E_m + (1.0 - s**params.gap_exp) * s**p_exp * per_m
    return float(out) if out.ndim == 0 else out


def binding_deficit_lower(params: RieszParams, constants: BallConstants, m: float, s):
    """Certified lower bound for the binding deficit E(m1) + E(m-m1) - E(m), m1 = s m:

        (s^{(2N-lam)/N} + (1-s)^{(2N-lam)/N} - 1) (m/|B_1|)^{(N-1)/N} Per B_1
            x ( D(B_1)/Per B_1 (m/|B_1|)^{(N+1-lam)/N} - f(s) ).

    Both factors are negative exactly when m < m*, so the bound is
    positive there and vanishes at (m, s) = (m*, 1/2).
    """
    m = check_mass(m)
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0.0) or np.any(s >= 1.0):
        raise ValueError("s must lie in (0, 1)")
    t = m / constants.volume
    sum_defect = s**params.riesz_exp + (1.0 - s) ** params.riesz_exp - 1.0
    per_m = t**params.perimeter_exp * constants.surface
    gap = constants.riesz_self / constants.surface * t**params.gap_exp - f_of_s(params, s)
    out = sum_defect * per_m * gap
    return float(out) if out.ndim == 0 else out


def binding_scan(
    params: RieszParams, constants: BallConstants, m: float, grid_size: int
) -> BindingReport:
    """Scan the deficit lower bound over s and issue a verdict.

    strict_binding_certified iff the bound is strictly positive at every
    grid point; a negative or zero minimum is inconclusive (the bound is
    one-sided).
    """
    if grid_size < 100:
        raise ValueError("grid_size must be >= 100")
    m = check_mass(m)
    s = open_grid(grid_size)
    lb = binding_deficit_lower(params, constants, m, s)
    i = int(np.argmin(lb))
    verdict = "strict_binding_certified" if lb[i] > 0.0 else "inconclusive"
    return BindingReport(params, m, s, lb, float(lb[i]), float(s[i]), verdict)


def uniqueness_gap(params: RieszParams, constants: BallConstants, m: float) -> float:
    """Ball energy at m minus the chained dilation bound from m*; exactly 0.

    With s = m/m*, the bound s^{(2N-lam)/N} E_ball(m*) +
    (1 - s^{(N+1-lam)/N}) s^{(N-1)/N} (m*/|B_1|)^{(N-1)/N} Per B_1
    collapses algebraically to the ball energy at m, which is the
    equality case behind uniqueness below m*.  The return value is the
    numerical residual of that identity.
    """
    m = check_mass(m)
    m_star = critical_mass(params, constants)
    if m >= m_star:
        raise ValueError(f"m must be < m* = {m_star:.6g}, got {m}")
    s = m / m_star
    e_star = ball_energy(params, m_star, constants).total
    bound = binding_lower_bound(params, m_star, s, e_star, constants)
    return ball_energy(params, m, constants).total - bound


def riesz_sum_defect_negative(params: RieszParams, grid_size: int = 1000) -> bool:
    """Grid check of s^{(2N-lam)/N} + (1-s)^{(2N-lam)/N} < 1 on (0,1)."""
    s = open_grid(grid_size)
    b = params.riesz_exp
    return bool(np.all(s**b + (1.0 - s) ** b < 1.0))

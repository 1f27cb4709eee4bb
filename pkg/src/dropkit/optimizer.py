"""Volume-constrained pattern search over Fourier boundary coefficients.

The search probes whether the disk minimizes Per + D at fixed area:
coordinate-wise +/- step proposals on (a_1..a_K, b_1..b_K), each proposal
re-projected to the target area by the exact r0 rescale, accepted only on
strict energy decrease (beyond a small noise floor so rasterization
jitter is not chased).  Derivative-free on purpose: shape gradients of
the Riesz term couple badly with rasterization noise at this scale.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .core import EnergyBreakdown, RieszParams, check_mass
from .quadrature import total_energy
from .shapes import FourierShape

# accepted decrease must exceed this times |total| (rasterization jitter floor)
NOISE_FLOOR = 1e-9

DEFAULT_OPTS = {
    "h": 0.01,  # cell size as a fraction of the current base radius
    "nodes": 2048,
    "max_iter": 10_000,
    "step_init": 0.1,
    "step_min": 1e-4,
    "seed": 0,  # recorded for manifests; the sweep itself is deterministic
}


@dataclass
class OptimizationResult:
    shape: FourierShape
    energy: EnergyBreakdown
    iterations: int
    converged: bool
    history: list[tuple[int, float]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "shape": json.loads(self.shape.to_json()),
                "energy": {
                    "perimeter": self.energy.perimeter,
                    "riesz": self.energy.riesz,
                    "total": self.energy.total,
                },
                "iterations": self.iterations,
                "converged": self.converged,
                "history": [[i, t] for i, t in self.history],
            }
        )


def _merge_opts(opts: dict | None) -> dict:
    merged = dict(DEFAULT_OPTS)
    if opts:
        unknown = set(opts) - set(DEFAULT_OPTS)
        if unknown:
            raise ValueError(f"unknown options: {sorted(unknown)}")
        merged.update(opts)
    return merged


def _project(r0: float, a: list[float], b: list[float], m: float) -> FourierShape | None:
    """Volume projection: rescale r0 so the area is exactly m.

    Returns None when the proposed coefficients violate boundary
    positivity (infeasible proposal, not an error).
    """
    ss = sum(x * x for x in a) + sum(x * x for x in b)
    r0_new = math.sqrt(m / (math.pi * (1.0 + 0.5 * ss)))
    try:
        return FourierShape(r0_new, tuple(a), tuple(b))
    except ValueError:
        return None


def _energy(shape: FourierShape, params: RieszParams, opts: dict) -> EnergyBreakdown:
    return total_energy(shape, params, opts["h"] * shape.base_radius, opts["nodes"])


def optimize_shape(
    params: RieszParams,
    m: float,
    modes: int,
    opts: dict | None = None,
    start: FourierShape | None = None,
) -> OptimizationResult:
    """Minimize total_energy over K-mode Fourier shapes of area m.

    Sweeps coefficients in fixed order, halves the step after a sweep
    with no accepted proposal, and stops at step < step_min (converged)
    or max_iter energy evaluations.
    """
    m = check_mass(m)
    if modes < 1:
        raise ValueError("modes must be >= 1")
    opts = _merge_opts(opts)

    if start is None:
        a = [0.0] * modes
        b = [0.0] * modes
    else:
        a = list(start.cos_coeffs) + [0.0] * (modes - len(start.cos_coeffs))
        b = list(start.sin_coeffs) + [0.0] * (modes - len(start.sin_coeffs))
        a, b = a[:modes], b[:modes]

    shape = _project(1.0, a, b, m)
    if shape is None:
        raise ValueError("start shape violates boundary positivity")
    best = _energy(shape, params, opts)
    history = [(0, best.total)]
    evals = 1
    step = opts["step_init"]
    converged = False

    while evals < opts["max_iter"]:
        improved = False
        for coeffs, idx in [(a, i) for i in range(modes)] + [(b, i) for i in range(modes)]:
            for sign in (1.0, -1.0):
                if evals >= opts["max_iter"]:
                    break
                trial = list(coeffs)
                trial[idx] += sign * step
                cand = _project(
                    shape.base_radius,
                    trial if coeffs is a else a,
                    trial if coeffs is b else b,
                    m,
                )
                if cand is None:
                    continue  # infeasible proposal, rejected
                cand_energy = _energy(cand, params, opts)
                evals += 1
                if cand_energy.total < best.total * (1.0 - NOISE_FLOOR):
                    coeffs[idx] = trial[idx]
                    shape, best = cand, cand_energy
                    history.append((evals, best.total))
                    improved = True
                    break  # re-sweep from the accepted point
        if not improved:
            step *= 0.5
            if step < opts["step_min"]:
                converged = True
                break

    return OptimizationResult(shape, best, evals, converged, history)


def perturbation_curve(
    params: RieszParams,
    m: float,
    mode: int,
    amplitudes,
    opts: dict | None = None,
) -> list[tuple[float, float]]:
    """Energies of r = r0(eps) (1 + eps cos k theta) projected to area m.

    Probes local stability of the disk; k = 1 is excluded (a translation
    to first order).  Amplitudes that break positivity are flagged with a
    NaN total and the curve continues.
    """
    m = check_mass(m)
    if mode < 2:
        raise ValueError("mode must be >= 2")
    opts = _merge_opts(opts)
    curve = []
    for eps in amplitudes:
        a = [0.0] * mode
        a[mode - 1] = float(eps)
        cand = _project(1.0, a, [0.0] * mode, m)
        if cand is None:
            curve.append((float(eps), math.nan))
            continue
        curve.append((float(eps), _energy(cand, params, opts).total))
    return curve

import json
import math

import numpy as np
import pytest

from dropkit import (
    FourierShape,
    ball_energy,
    critical_mass,
    optimize_shape,
    perturbation_curve,
)
from dropkit.inequalities import binding_lower_bound, open_grid

# coarse, fast settings for the functional tests; the full-resolution
# descent study lives in the acceptance suite
FAST = {"h": 0.05, "max_iter": 60, "step_min": 1e-2}


def test_validation(p21):
    with pytest.raises(ValueError):
        optimize_shape(p21, 0.0, 2)
    with pytest.raises(ValueError):
        optimize_shape(p21, 1.0, 0)
    with pytest.raises(ValueError):
        optimize_shape(p21, 1.0, 2, opts={"bogus": 1})
    with pytest.raises(ValueError):
        perturbation_curve(p21, 1.0, 1, [0.1])


def test_volume_projection_exact(p21):
    res = optimize_shape(p21, 1.5, 2, opts=FAST)
    assert res.shape.area() == pytest.approx(1.5, rel=1e-10)


def test_monotone_history_from_perturbed_start(p21):
    start = FourierShape(1.0, (0.0, 0.25))
    res = optimize_shape(p21, 1.5, 2, opts=FAST, start=start)
    totals = [t for _, t in res.history]
    assert all(b < a for a, b in zip(totals, totals[1:]))
    assert res.energy.total <= totals[0]


def test_deterministic_repeat(p21):
    start = FourierShape(1.0, (0.2,))
    a = optimize_shape(p21, 1.0, 1, opts=FAST, start=start)
    b = optimize_shape(p21, 1.0, 1, opts=FAST, start=start)
    assert a.energy.total == b.energy.total
    assert a.shape.cos_coeffs == b.shape.cos_coeffs
    assert a.history == b.history


def test_result_json_round_trip(p21):
    res = optimize_shape(p21, 1.0, 1, opts=FAST)
    data = json.loads(res.to_json())
    assert data["energy"]["total"] == pytest.approx(res.energy.total)
    assert data["history"][0][0] == 0
    FourierShape.from_json(json.dumps(data["shape"]))


def test_descent_toward_disk_exploratory(p21, c21):
    # evidence, not a certificate: the search should drain the k=2 bump
    # and land near the ball energy.  k=1 directions are energy-flat
    # (translations to first order) so only modes >= 2 are asserted small.
    m = 0.5 * critical_mass(p21, c21)
    start = FourierShape(1.0, (0.0, 0.3))
    res = optimize_shape(p21, m, 2, opts={"h": 0.03, "max_iter": 150, "step_min": 1e-3}, start=start)
    ref = ball_energy(p21, m, c21).total
    assert abs(res.energy.total - ref) / ref < 0.01
    assert abs(res.shape.cos_coeffs[1]) < 0.05


def test_optimizer_respects_dilation_lower_bound(p21, c21):
    # self-consistency of the bound chain: the dilation bound seeded with
    # the optimizer's own best energy never exceeds the ball energy at
    # the scaled mass
    m = 1.5
    res = optimize_shape(p21, m, 2, opts=FAST)
    for s in open_grid(19):
        lb = binding_lower_bound(p21, m, float(s), res.energy.total, c21)
        assert lb <= ball_energy(p21, float(s) * m, c21).total * (1 + 1e-6)


def test_perturbation_curve_symmetry_and_base(p21, c21):
    m = 1.5
    curve = perturbation_curve(p21, m, 2, [-0.1, 0.0, 0.1], opts={"h": 0.02})
    eps, tot = zip(*curve)
    ref = ball_energy(p21, m, c21).total
    assert tot[1] == pytest.approx(ref, rel=0.01)
    # reflection symmetry for even k, up to quadrature noise
    assert tot[0] == pytest.approx(tot[2], rel=1e-3)


def test_perturbation_curve_convexity(p21, c21):
    m = 0.5 * critical_mass(p21, c21)
    curve = perturbation_curve(p21, m, 2, [-0.05, 0.0, 0.05], opts={"h": 0.01})
    tot = [t for _, t in curve]
    second = (tot[0] - 2 * tot[1] + tot[2]) / 0.05**2
    assert second > 0


def test_perturbation_curve_infeasible_flagged(p21):
    curve = perturbation_curve(p21, 1.0, 2, [0.0, 2.0], opts={"h": 0.05})
    assert math.isfinite(curve[0][1])
    assert math.isnan(curve[1][1])

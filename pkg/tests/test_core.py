import math

import numpy as np
import pytest

from dropkit import (
    EnergyBreakdown,
    RieszParams,
    energy_scale,
    unit_ball_volume,
    unit_sphere_area,
)


def test_unit_ball_volume_low_dims():
    assert unit_ball_volume(2) == pytest.approx(math.pi, rel=1e-15)
    assert unit_ball_volume(3) == pytest.approx(4 * math.pi / 3, rel=1e-15)
    assert unit_ball_volume(4) == pytest.approx(math.pi**2 / 2, rel=1e-15)


def test_unit_ball_volume_n4_monte_carlo_cross_check():
    # hit-or-miss volume estimate of the 4-ball inside [-1,1]^4
    rng = np.random.default_rng(7)
    n = 2_000_000
    x = rng.uniform(-1.0, 1.0, (n, 4))
    frac = np.mean((x * x).sum(axis=1) < 1.0)
    est = 16.0 * frac
    stderr = 16.0 * math.sqrt(frac * (1 - frac) / n)
    assert abs(est - unit_ball_volume(4)) < 4 * stderr


def test_unit_sphere_area():
    assert unit_sphere_area(2) == pytest.approx(2 * math.pi, rel=1e-15)
    assert unit_sphere_area(3) == pytest.approx(4 * math.pi, rel=1e-15)
    assert unit_sphere_area(5) == pytest.approx(8 * math.pi**2 / 3, rel=1e-14)


def test_dimension_validation():
    with pytest.raises(ValueError):
        unit_ball_volume(0)
    with pytest.raises(ValueError):
        unit_sphere_area(1)


def test_params_derived_exponents():
    p = RieszParams(3, 1.0)
    assert p.perimeter_exp == pytest.approx(2 / 3)
    assert p.riesz_exp == pytest.approx(5 / 3)
    assert p.gap_exp == pytest.approx(1.0)
    assert p.gap_exp > 0


@pytest.mark.parametrize("dim,lam", [(1, 0.5), (2, 0.0), (2, 2.0), (3, -1.0), (3, 3.5)])
def test_params_validation(dim, lam):
    with pytest.raises(ValueError):
        RieszParams(dim, lam)


def test_breakdown_total_identity():
    e = EnergyBreakdown(1.25, 2.5)
    assert e.total == e.perimeter + e.riesz
    with pytest.raises(ValueError):
        EnergyBreakdown(-1.0, 0.0)


def test_energy_scale_identity_at_unit_mass():
    e = EnergyBreakdown(3.0, 7.0)
    out = energy_scale(e, RieszParams(3, 1.5), 1.0)
    assert out.perimeter == e.perimeter and out.riesz == e.riesz


def test_energy_scale_examples():
    out = energy_scale(EnergyBreakdown(1.0, 1.0), RieszParams(3, 1.0), 8.0)
    assert out.perimeter == pytest.approx(4.0, rel=1e-14)
    assert out.riesz == pytest.approx(32.0, rel=1e-14)
    out = energy_scale(EnergyBreakdown(1.0, 1.0), RieszParams(2, 1.0), 4.0)
    assert out.perimeter == pytest.approx(2.0, rel=1e-14)
    assert out.riesz == pytest.approx(8.0, rel=1e-14)


def test_energy_scale_multiplicative():
    p = RieszParams(4, 2.7)
    e = EnergyBreakdown(1.3, 0.4)
    m1, m2 = 3.7, 11.9
    via_m1 = energy_scale(energy_scale(e, p, m1), p, m2 / m1)
    direct = energy_scale(e, p, m2)
    assert via_m1.perimeter == pytest.approx(direct.perimeter, rel=1e-14)
    assert via_m1.riesz == pytest.approx(direct.riesz, rel=1e-14)


def test_energy_scale_rejects_bad_mass():
    with pytest.raises(ValueError):
        energy_scale(EnergyBreakdown(1.0, 1.0), RieszParams(3, 1.0), 0.0)
    with pytest.raises(ValueError):
        energy_scale(EnergyBreakdown(1.0, 1.0), RieszParams(3, 1.0), -2.0)

import math

import numpy as np
import pytest

from dropkit import (
    RieszParams,
    UnsupportedRegimeError,
    angular_constant,
    ball_constants,
    ball_energy,
    best_split,
    critical_mass,
    crossing_mass,
    moment_integral,
    necessary_condition,
    nonexistence_mass_bound,
    rasterize_ball,
    split_energy,
)


def test_split_single_ball(p31, c31):
    assert split_energy(p31, c31, 2.0, 1) == pytest.approx(
        ball_energy(p31, 2.0, c31).total, rel=1e-14
    )
    with pytest.raises(ValueError):
        split_energy(p31, c31, 2.0, 0)


def test_split_equality_at_critical(p31, c31):
    m_star = critical_mass(p31, c31)
    assert split_energy(p31, c31, m_star, 1) == pytest.approx(
        split_energy(p31, c31, m_star, 2), rel=1e-9
    )


def test_split_two_beats_one_above_critical(p31, c31):
    assert split_energy(p31, c31, 4.0, 2) < split_energy(p31, c31, 4.0, 1)


def test_best_split_below_critical(p31, c31):
    m_star = critical_mass(p31, c31)
    for f in (0.2, 0.6, 0.95):
        assert best_split(p31, c31, f * m_star, 6).best_k == 1


def test_best_split_just_above_critical(p31, c31):
    rep = best_split(p31, c31, 1.01 * critical_mass(p31, c31), 6)
    assert rep.best_k == 2


def test_best_split_large_mass_regression(p31, c31):
    rep = best_split(p31, c31, 40.0, 10)
    assert rep.best_k == 10
    assert rep.best_total == pytest.approx(219.34611910186112, rel=1e-9)


def test_split_transition_matches_crossing(p31, c31):
    m_star = crossing_mass(p31, c31)
    grid = np.arange(3.4, 3.6, 0.005)
    flips = [m for m in grid if best_split(p31, c31, float(m), 4).best_k >= 2]
    assert flips
    assert flips[0] - 0.005 <= m_star <= flips[0] + 0.005


def test_unequal_k2_splits_never_beat_equal(p31, c31):
    m = 3.0
    equal = split_energy(p31, c31, m, 2)
    rng = np.random.default_rng(4)
    for s in rng.uniform(0.05, 0.95, 20):
        if abs(s - 0.5) < 1e-3:
            continue
        unequal = (
            ball_energy(p31, s * m, c31).total + ball_energy(p31, (1 - s) * m, c31).total
        )
        assert unequal > equal


def test_angular_constant_values():
    assert angular_constant(2) == pytest.approx(1 / math.pi, abs=1e-10)
    assert angular_constant(3) == pytest.approx(0.25, abs=1e-10)
    with pytest.raises(ValueError):
        angular_constant(1)


def test_angular_constant_decreasing_in_dimension():
    vals = [angular_constant(N) for N in range(2, 9)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_necessary_condition_unit_ball(p31):
    ball = rasterize_ball(3, 1.0, 0.05)
    rep = necessary_condition(ball, p31)
    assert rep.satisfied
    assert rep.moment == pytest.approx((4 * math.pi / 3) ** 2, rel=0.01)
    assert rep.bound == pytest.approx(2 * (4 * math.pi / 3) / 0.25, rel=0.01)


def test_necessary_condition_heavy_ball_fails(p31):
    radius = (9.0 / (4 * math.pi / 3)) ** (1 / 3)
    ball = rasterize_ball(3, radius, 0.05)
    rep = necessary_condition(ball, p31)
    assert not rep.satisfied
    assert rep.margin < 0


def test_necessary_condition_single_cell(p31):
    from dropkit import GridShape

    g = GridShape(3, 0.1, np.array([[0, 0, 0]]))
    rep = necessary_condition(g, p31)
    assert rep.satisfied
    assert rep.margin > 0.9 * rep.bound  # moment is negligible next to the measure


def test_nonexistence_bound_lambda_one(p31, c31, p21, c21):
    assert nonexistence_mass_bound(p31, c31) == pytest.approx(8.0, abs=1e-10)
    assert nonexistence_mass_bound(p21, c21) == pytest.approx(2 * math.pi, abs=1e-10)


def test_nonexistence_bound_small_lambda_regression():
    params = RieszParams(2, 0.5)
    constants = ball_constants(params)
    ball = rasterize_ball(2, 1.0, 0.01)
    bound = nonexistence_mass_bound(params, constants, moment_integral(ball, 0.5))
    assert bound == pytest.approx(5.8405826, rel=1e-4)
    assert bound >= critical_mass(params, constants)


def test_nonexistence_bound_exceeds_critical(p31, c31, p21, c21):
    assert nonexistence_mass_bound(p31, c31) >= critical_mass(p31, c31)
    assert nonexistence_mass_bound(p21, c21) >= critical_mass(p21, c21)


def test_nonexistence_bound_unsupported_range():
    params = RieszParams(3, 1.5)
    constants = ball_constants(params)
    with pytest.raises(UnsupportedRegimeError):
        nonexistence_mass_bound(params, constants)
    with pytest.raises(ValueError):
        nonexistence_mass_bound(RieszParams(2, 0.5), ball_constants(RieszParams(2, 0.5)), None)

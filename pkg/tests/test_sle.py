import math

import numpy as np
import pytest

from loewner_lab import (
    DEFAULT_TOLERANCES,
    Geometry,
    SleParams,
)
from loewner_lab.rng import substream
from loewner_lab.sle import (
    TwoSleState,
    sample,
    sample_dipolar,
    sample_sle_kr,
    sample_values,
    two_sle_run,
)


def test_kappa_zero_is_the_zero_driving():
    d = sample(SleParams(0.0, T=1.0, dt=1e-2, seed=3))
    assert np.all(d.values == 0)
    assert d.geometry is Geometry.chordal


def test_samples_are_reproducible():
    p = SleParams(6.0, T=1.0, dt=1e-3, seed=9)
    a = sample(p).values
    assert np.array_equal(a, sample(p).values)
    assert not np.array_equal(a, sample(p.with_index(1)).values)


def test_increment_variance():
    kappa, dt = 4.0, 1e-3
    d = sample(SleParams(kappa, T=10.0, dt=dt, seed=1))
    increments = np.diff(d.values)
    assert increments.var() / dt == pytest.approx(kappa, rel=0.1)
    assert abs(increments.mean()) < 5 * math.sqrt(kappa * dt / 10_000)


def test_geometry_dispatch():
    for geometry in Geometry:
        d = sample(SleParams(2.0, geometry=geometry, seed=2))
        assert d.geometry is geometry
        assert d.scale == geometry.default_scale


def test_sle_kr_with_the_dipolar_rho_is_dipolar_sle():
    kappa = 3.0
    plain = SleParams(kappa, geometry=Geometry.dipolar, seed=4)
    kr = SleParams(
        kappa, geometry=Geometry.dipolar, seed=4, rho=(kappa - 6) / 2
    )
    assert kr.drift == 0.0
    assert np.array_equal(sample(kr).values, sample_dipolar(plain).values)


def test_sle_kr_drift():
    p = SleParams(2.0, geometry=Geometry.dipolar, seed=5, rho=1.0)
    assert p.drift == pytest.approx(3.0)
    d = sample_sle_kr(p)
    base = sample_dipolar(SleParams(2.0, geometry=Geometry.dipolar, seed=5))
    assert np.allclose(d.values - base.values, 3.0 * d.times)

    with pytest.raises(ValueError):
        sample_sle_kr(SleParams(2.0))


def test_sample_values_rows_match_single_samples():
    p = SleParams(6.0, T=0.5, dt=1e-2, seed=8)
    times, values = sample_values(p, 4, start=2)
    assert values.shape == (4, times.size)
    for i in range(4):
        assert np.array_equal(values[i], sample(p.with_index(2 + i)).values)


@pytest.mark.parametrize("kwargs", [
    {"kappa": -1.0},
    {"kappa": float("inf")},
    {"kappa": 2.0, "dt": 0.0},
    {"kappa": 2.0, "T": 1e-4, "dt": 1e-3},
    {"kappa": 2.0, "scale": -1.0},
])
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        SleParams(**kwargs)


def test_two_sle_state():
    with pytest.raises(ValueError):
        TwoSleState(1.0, 0.0, 0.5)
    with pytest.raises(ValueError):
        TwoSleState(0.0, 1.0, 0.5, a1=0.7, a2=0.7)

    s = TwoSleState(-0.5, 0.5, delta=0.5)
    d1, d2 = s.drift(4.0)
    # symmetric speeds: equal and opposite drifts (κΔ + 2)/2 per point
    assert d1 == pytest.approx(-2.0)
    assert d2 == pytest.approx(2.0)

    stepped = s.step(4.0, 1e-3, substream(0))
    assert stepped.t == pytest.approx(1e-4)
    assert not stepped.collided

    done = TwoSleState(0.0, 0.0, 0.5, collided=True)
    assert done.step(4.0, 1e-3, substream(0)) is done


def test_two_sle_runs_do_not_depend_on_the_farm_size():
    tol = DEFAULT_TOLERANCES.replace(eps_collide=0.9)
    small = two_sle_run(-0.5, 0.5, 2.0, -2.0, 0.5, 1e-3, 3, 7, tol)
    large = two_sle_run(-0.5, 0.5, 2.0, -2.0, 0.5, 1e-3, 5, 7, tol)
    assert np.array_equal(small, large[:3])
    assert np.all(np.isfinite(small))


@pytest.mark.slow
def test_collision_exponent_pairs_the_curves():
    kappa = 2.0
    hit = two_sle_run(-0.5, 0.5, kappa, (kappa - 6) / kappa, 2.0, 1e-3,
                      20, 11)
    assert np.isfinite(hit).mean() >= 0.9


@pytest.mark.slow
def test_escape_exponent_keeps_the_curves_apart():
    kappa = 4.0
    hit = two_sle_run(-0.5, 0.5, kappa, 2 / kappa, 2.0, 1e-3, 50, 11)
    assert np.all(np.isinf(hit))

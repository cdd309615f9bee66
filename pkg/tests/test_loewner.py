import cmath
import math

import numpy as np
import pytest

from loewner_lab import (
    DEFAULT_TOLERANCES,
    Geometry,
    SleParams,
    Swallowed,
)
from loewner_lab.loewner import (
    DrivingPath,
    chordal_forward_step,
    chordal_slit_step,
    closing_arc,
    conformal_radius,
    forward_batch,
    forward_map,
    swallowing_times,
    time_grid,
    trace,
    trace_batch,
)
from loewner_lab.sle import sample_chordal


def zero_path(T, dt, geometry=Geometry.chordal, scale=1.0):
    times = time_grid(T, dt)
    return DrivingPath(times, np.zeros_like(times), geometry, scale)


def test_time_grid_ends_exactly():
    times = time_grid(1.0, 0.3)
    assert times[0] == 0.0
    assert times[-1] == 1.0
    assert np.all(np.diff(times) > 0)
    assert time_grid(1.0, 1e-4).size == 10_001


@pytest.mark.parametrize("times, values", [
    ([0.0, 0.5, 0.4], [0.0, 0.0, 0.0]),
    ([0.1, 0.2], [0.0, 0.0]),
    ([0.0, 0.1], [0.0]),
    ([0.0, 0.1], [0.0, float("nan")]),
])
def test_driving_path_rejects_bad_grids(times, values):
    with pytest.raises(ValueError):
        DrivingPath(times, values)


def test_driving_path_is_piecewise_constant():
    d = DrivingPath([0.0, 1.0, 2.0], [0.0, 3.0, 5.0])
    assert d.value_at(0.5) == 3.0
    assert d.value_at(1.0) == 3.0
    assert d.value_at(1.5) == 5.0
    assert list(d.intervals(1.5)) == [(0.0, 1.0, 3.0), (1.0, 0.5, 5.0)]


def test_rescaled_path():
    d = DrivingPath([0.0, 1.0], [0.0, 1.0]).rescaled(2.0)
    assert d.times.tolist() == [0.0, 4.0]
    assert d.values.tolist() == [0.0, 2.0]


def test_slit_step_tip():
    xi, dt = 0.7, 0.04
    assert chordal_slit_step(xi, xi, dt) == pytest.approx(xi + 0.4j)


def test_slit_step_stays_imaginary():
    t = 0.3
    w = chordal_slit_step(2j, 0.0, t)
    assert w.real == pytest.approx(0.0, abs=1e-15)
    assert w.imag == pytest.approx(2 * math.sqrt(1 + t))


def test_forward_then_inverse_is_identity():
    w = 1 + 1j
    z = chordal_slit_step(w, 0.3, 0.01)
    back = chordal_forward_step(z, 0.3, 0.01)
    assert back.alive
    assert abs(back.value - w) < 1e-12


def test_forward_step_formula():
    # sqrt((3i)² + 4) = i√5
    out = chordal_forward_step(3j, 0.0, 1.0)
    assert out.alive
    assert out.value == pytest.approx(1j * math.sqrt(5))

    out = chordal_forward_step(complex(1.5), 0.0, 0.2)
    assert out.value == pytest.approx(math.sqrt(1.5**2 + 0.8))


def test_forward_step_swallows_points_next_to_the_driving_point():
    loose = DEFAULT_TOLERANCES.replace(eps_swallow=1e-5)
    out = chordal_forward_step(0.001 + 0.001j, 0.0, 1.0, loose)
    assert out.swallowed
    assert out.tau == pytest.approx(0.0, abs=1e-12)

    out = chordal_forward_step(0.0005 + 0.0005j, 0.0, 1.0)
    assert out.swallowed
    assert math.isnan(out.value.real)


def test_step_rejects_bad_input():
    with pytest.raises(ValueError):
        chordal_slit_step(1j, 0.0, 0.0)
    with pytest.raises(ValueError):
        chordal_forward_step(-1j, 0.0, 0.1)


def test_slit_trace_tip():
    tr = trace(zero_path(1.0, 1e-4))
    assert len(tr.points) == 10_001
    assert abs(tr.tip - 2j) <= 1e-6
    assert tr.points[0] == 0


def test_arc_trace_lands_on_the_real_axis():
    # the driving is singular at the closing time: the tip converges like √dt
    dt = 1e-4
    tr = trace(closing_arc(1.0, dt))
    assert abs(tr.tip - 2) < 20 * math.sqrt(dt)
    # half circle of radius 1 around 1, away from the closing end
    body = tr.points[1:-100]
    assert np.allclose(np.abs(body - 1), 1, atol=0.05)


def test_arc_forward_map():
    d = closing_arc(1.0, 1e-4)
    for z in (2j, 2 + 1j, -1 + 0.5j, 0.5 + 2j, 3 + 0.1j, -2 + 2j):
        result = forward_map(d, z)
        assert result.alive
        assert abs(result.value - (z + 1 / (z - 1))) <= 1e-3


def test_brownian_trace_stays_in_the_upper_half_plane():
    rng = np.random.default_rng(5)
    times = time_grid(1.0, 1e-3)
    steps = math.sqrt(6 * 1e-3) * rng.standard_normal(times.size - 1)
    d = DrivingPath(times, np.concatenate(([0.0], np.cumsum(steps))))
    tr = trace(d)
    assert tr.points[0] == 0
    assert np.all(tr.points.imag >= 0)


def test_trace_batch_matches_trace():
    rng = np.random.default_rng(11)
    times = time_grid(0.5, 1e-2)
    values = np.cumsum(
        np.hstack([np.zeros((3, 1)),
                   0.2 * rng.standard_normal((3, times.size - 1))]),
        axis=1,
    )
    batch = trace_batch(times, values, every=5)
    for i in range(3):
        single = trace(DrivingPath(times, values[i])).points[::5]
        assert np.allclose(batch[i], single, atol=1e-12)


def test_forward_map_slit():
    result = forward_map(zero_path(1.0, 1e-2), 3j)
    assert result.value == pytest.approx(1j * math.sqrt(5))


def test_forward_map_swallows_points_on_the_slit():
    # i lies on the slit [0, 2i] and is reached at t = 1/4
    result = forward_map(zero_path(1.0, 1e-2), 1j)
    assert result.swallowed
    assert result.tau == pytest.approx(0.25, abs=0.02)


def test_forward_map_swallows_points_at_the_root():
    result = forward_map(zero_path(1.0, 1e-2), 0.0005 + 0.0005j)
    assert result.swallowed
    assert result.tau == 0.0


def test_swallowing_times_of_boundary_points():
    # the driving point jumps over 1 at the first step
    d = DrivingPath([0.0, 0.1, 0.2], [0.0, 2.0, 2.0])
    tau = swallowing_times(d, [1.0, 3.0, -1.0])
    assert tau[0] == 0.0
    assert tau[1] == np.inf
    assert tau[2] == np.inf


def test_conformal_radius():
    assert conformal_radius(zero_path(1.0, 1e-2), 3j) == pytest.approx(10 / 3)
    d = zero_path(1.0, 1e-2)
    assert conformal_radius(d, 1 + 2j, T=0.0) == pytest.approx(4.0)
    with pytest.raises(Swallowed):
        conformal_radius(d, 0.0005 + 0.0005j)
    with pytest.raises(ValueError):
        conformal_radius(d, 1.0 + 0j)


def test_radial_flow_invariant():
    scale = 2.0
    z = 1 + 1j
    T = 0.5
    g = forward_map(zero_path(T, 1e-2, Geometry.radial, scale), z).value
    invariant = cmath.cos(g / scale) * math.exp(2 * T / scale**2)
    assert abs(invariant - cmath.cos(z / scale)) < 1e-6


def test_dipolar_flow_invariant():
    scale = 1.0
    z = 0.5 + 1.5j
    T = 0.5
    g = forward_map(zero_path(T, 1e-2, Geometry.dipolar, scale), z).value
    invariant = cmath.cosh(g / (2 * scale)) * math.exp(-T / (2 * scale**2))
    assert abs(invariant - cmath.cosh(z / (2 * scale))) < 1e-6


def test_forward_batch_derivative_matches_finite_difference():
    d = closing_arc(1.0, 1e-3)
    z, eps = 2 + 1j, 1e-6
    state = forward_batch(
        d.times, d.values[None, :], [z, z + eps], 0.3, with_derivative=True
    )
    numeric = (state.h[0, 1] - state.h[0, 0]) / eps
    assert abs(state.derivative[0, 0] - numeric) < 1e-4


def test_capacity_adds_under_composition():
    w = 1e6 + 3e5j
    dt1, dt2 = 0.3, 0.45
    d = DrivingPath([0.0, dt1, dt1 + dt2], [0.0, 0.7, -0.4])
    first = forward_map(d, w, T=dt1).value
    both = forward_map(d, w).value
    assert ((first - w) * w).real == pytest.approx(2 * dt1, rel=1e-3)
    assert ((both - first) * first).real == pytest.approx(2 * dt2, rel=1e-3)
    assert ((both - w) * w).real == pytest.approx(2 * (dt1 + dt2), rel=1e-3)


def test_trace_scales_with_its_driving_path():
    d = sample_chordal(SleParams(6.0, T=0.5, dt=1e-3, seed=4))
    base = trace(d)
    for factor in (0.5, 3.0):
        scaled = trace(d.rescaled(factor))
        assert np.allclose(scaled.times, base.times * factor**2)
        assert np.allclose(scaled.points, factor * base.points, atol=1e-6)


def test_halving_the_grid_step_converges():
    def drive(t):
        return math.sin(3 * t)

    dt = 2e-3
    tips = [
        trace(DrivingPath.from_function(drive, 1.0, dt / 2**k)).points
        for k in range(3)
    ]
    first = np.max(np.abs(tips[1][::2] - tips[0]))
    second = np.max(np.abs(tips[2][::2] - tips[1]))
    assert first < 5 * math.sqrt(dt)
    assert second < first


@pytest.mark.slow
def test_conformal_radius_shrinks_as_the_hull_grows():
    d = sample_chordal(SleParams(6.0, T=0.25, dt=1e-3, seed=8))
    radii = [conformal_radius(d, 8j, T=t) for t in np.linspace(0, 0.25, 11)]
    assert radii[0] == pytest.approx(16.0)
    assert np.all(np.diff(radii) <= 1e-9)


@pytest.mark.slow
def test_swallowed_points_are_met_by_the_trace():
    kappa, dt = 6.0, 1e-4
    d = sample_chordal(SleParams(kappa, T=1.0, dt=dt, seed=21))
    points = trace(d).points
    xs = np.linspace(0.05, 1.0, 20)
    tau = swallowing_times(d, xs)
    slack = 10 * math.sqrt(kappa * dt)
    assert np.isfinite(tau).any()
    for x, t in zip(xs, tau):
        if not np.isfinite(t):
            continue
        k = int(np.searchsorted(d.times, t))
        near = points[max(k - 5, 0):k + 6]
        assert near.imag.min() < slack
        assert near.real.max() > x - slack

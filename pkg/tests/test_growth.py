import math

import numpy as np
import pytest

from loewner_lab import (
    CuspReached,
    DlaCluster,
    HlCluster,
    LgPolyState,
)
from loewner_lab.growth import (
    bump,
    bump_derivative,
    cusp_indicator,
    hl_boundary,
    hl_capacity,
    hl_derivative,
    hl_grow,
    hl_map,
    lattice_dla,
    lg_area,
    lg_conserved,
    lg_evolve,
    lg_general_step,
    lg_rates,
    lg_velocity,
    lg_zn_cusp_time,
    lg_zn_evolve,
    lg_zn_state,
    lg_zn_time_of_radius,
    radius_of_gyration,
)
from loewner_lab.estimators import fit_dimension


def test_zn_state():
    s = lg_zn_state(3, 0.5, 0.4)
    assert s.N == 3
    assert s.R == 0.5
    assert s.beta == pytest.approx(0.4)
    assert lg_area(s) == pytest.approx(math.pi * 0.25 * (1 - 0.16 / 2))
    with pytest.raises(ValueError):
        lg_zn_state(3, 0.5, 1.0)
    with pytest.raises(ValueError):
        lg_zn_state(1, 0.5, 0.0)


def test_state_validation_and_round_trip():
    with pytest.raises(ValueError):
        LgPolyState([])
    with pytest.raises(ValueError):
        LgPolyState([1j])
    with pytest.raises(ValueError):
        LgPolyState([-1.0])
    s = LgPolyState([1.0, 0.1 + 0.2j, 0.05j], t=0.3)
    back = LgPolyState.from_dict(s.serialize())
    assert np.array_equal(back.coeffs, s.coeffs)
    assert back.t == 0.3


def test_zn_formulas():
    assert lg_zn_cusp_time(3, 1.0) == pytest.approx(0.25)
    assert lg_zn_cusp_time(4, 2.0) == pytest.approx(4 * 2 / 6)
    assert lg_zn_time_of_radius(3, 1.0, 1.0) == pytest.approx(0.25)


@pytest.mark.parametrize("n, R", [(3, 0.5), (4, 0.8), (6, 0.9)])
def test_zn_evolution_reaches_the_radius_of_its_time(n, R):
    t = lg_zn_time_of_radius(n, R, 1.0)
    R_t, beta = lg_zn_evolve(n, 1.0, t)
    assert R_t == pytest.approx(R, rel=1e-7)
    assert beta == pytest.approx(R ** (n - 2), rel=1e-6)


def test_zn_evolution_starts_like_a_disk():
    t = 1e-6
    R_t, _ = lg_zn_evolve(5, 1.0, t)
    assert R_t == pytest.approx(math.sqrt(2 * t), rel=1e-6)
    assert lg_zn_evolve(3, 1.0, 0.0) == (0.0, 0.0)


def test_zn_evolution_stops_at_the_cusp():
    with pytest.raises(CuspReached) as info:
        lg_zn_evolve(3, 1.0, 1.0)
    assert info.value.t == pytest.approx(0.25, abs=1e-3)
    with pytest.raises(ValueError):
        lg_zn_evolve(2, 1.0, 0.1)


def test_disk_rates():
    assert lg_rates(LgPolyState([2.0]))[0] == pytest.approx(0.5)


def test_zn_rates_match_the_radial_equation():
    R, beta = 0.5, 0.5
    rates = lg_rates(lg_zn_state(3, R, beta))
    assert rates[0].real == pytest.approx(1 / (R * (1 - beta**2)))
    assert np.allclose(rates[1:3], 0, atol=1e-12)


def test_area_grows_at_two_pi():
    s = LgPolyState([0.7, 0.05 + 0.02j, -0.03j, 0.04])
    rates = lg_rates(s)
    n = np.arange(s.N + 1)
    slope = 2 * math.pi * np.sum((1 - n) * np.real(np.conj(s.coeffs) * rates))
    assert slope == pytest.approx(2 * math.pi, rel=1e-9)


def test_velocity_agrees_with_the_coefficient_rates():
    s = LgPolyState([0.7, 0.05 + 0.02j, -0.03j, 0.04])
    rates = lg_rates(s)
    w = np.array([1.5, -1.2 + 0.7j, 2j])
    powers = 1 - np.arange(s.N + 1)
    expected = np.sum(rates * w[:, None] ** powers, axis=-1)
    assert np.allclose(lg_velocity(s, w), expected, atol=1e-9)


def test_conserved_moments():
    s = lg_zn_state(3, 0.5, 0.5)
    for k in (3, 4, 5):
        assert abs(lg_conserved(s, k)) < 1e-10
    f_n = s.coeffs[-1]
    assert lg_conserved(s, 2) == pytest.approx(
        s.R ** (1 - s.N) * np.conj(f_n), abs=1e-10
    )
    with pytest.raises(ValueError):
        lg_conserved(s, -1)


def test_general_evolution_conserves_moments():
    start = lg_zn_state(3, 0.5, 0.5, lg_zn_time_of_radius(3, 0.5, 1.0))
    states = lg_evolve(start, start.t + 0.05, 0.01)
    assert len(states) == 6
    end = states[-1]
    assert end.t == pytest.approx(start.t + 0.05)
    assert abs(lg_conserved(end, 2) - lg_conserved(start, 2)) < 1e-6
    assert lg_area(end) - lg_area(start) == pytest.approx(
        2 * math.pi * 0.05, abs=1e-6
    )
    # along the Z_3 family, β = R / R_c
    assert end.beta == pytest.approx(end.R, rel=1e-6)


def test_general_step_guards_the_cusp():
    s = lg_zn_state(3, 1.0, 0.9999)
    assert cusp_indicator(s) < 1e-3
    with pytest.raises(CuspReached):
        lg_general_step(s, 0.01)
    with pytest.raises(ValueError):
        lg_general_step(lg_zn_state(3, 1.0, 0.1), 0.0)


def test_bump_tip_and_capacity():
    lam = 0.3
    assert bump(1.0, lam) == pytest.approx(1 / math.cos(lam) + math.tan(lam))
    assert bump(-1.0, lam) == pytest.approx(-1.0)
    w = 1e6
    assert bump(w, lam) / w == pytest.approx(1 / math.cos(lam), rel=1e-5)


def test_bump_derivative_matches_finite_difference():
    lam, w, eps = 0.4, 1.3 + 0.8j, 1e-7
    numeric = (bump(w + eps, lam) - bump(w, lam)) / eps
    assert abs(bump_derivative(w, lam) - numeric) < 1e-5


def test_empty_cluster_is_the_unit_disk():
    c = HlCluster()
    boundary = hl_boundary(c, 64)
    assert np.allclose(np.abs(boundary), 1.0)
    assert hl_capacity(c) == 1.0
    assert len(c) == 0


def test_uniform_size_growth():
    c = hl_grow(HlCluster(alpha=0.0, lambda0=0.2), 10, 4)
    assert len(c) == 10
    assert np.all(c.bumps[:, 0] == 0.2)
    assert hl_capacity(c) == pytest.approx(math.cos(0.2) ** -10)


def test_growth_is_reproducible_and_outside_the_disk():
    a = hl_grow(HlCluster(alpha=2.0, lambda0=0.1), 50, 8)
    b = hl_grow(HlCluster(alpha=2.0, lambda0=0.1), 50, 8)
    assert np.array_equal(a.bumps, b.bumps)
    assert np.all(a.bumps[:, 0] <= math.pi / 4)
    assert np.all(np.abs(hl_boundary(a, 512)) >= 1 - 1e-9)


def test_cluster_derivative_matches_finite_difference():
    c = hl_grow(HlCluster(alpha=1.0, lambda0=0.2), 5, 2)
    w, eps = 1.5 + 0.5j, 1e-7
    numeric = abs(hl_map(c, w + eps) - hl_map(c, w)) / eps
    assert hl_derivative(c, w) == pytest.approx(numeric, rel=1e-5)


@pytest.mark.parametrize("kwargs", [
    {"alpha": 3.0},
    {"lambda0": 0.0},
    {"lambda0": 1.0},
    {"bumps": [[-0.1, 0.0]]},
    {"bumps": [[0.1, 7.0]]},
])
def test_cluster_validation(kwargs):
    with pytest.raises(ValueError):
        HlCluster(**kwargs)


def test_single_particle_dla():
    c = lattice_dla(1, 3)
    assert c.particle_count == 1
    (site,) = c.occupied - {(0, 0)}
    assert abs(site[0]) + abs(site[1]) == 1


def test_dla_cluster():
    c = lattice_dla(200, 5)
    assert len(c.occupied) == 201
    assert c.is_connected()
    assert 0 < radius_of_gyration(c) <= c.radius
    assert lattice_dla(200, 5).occupied == c.occupied


def test_dla_cluster_validation():
    with pytest.raises(ValueError):
        DlaCluster(frozenset({(1, 0)}), 0)
    with pytest.raises(ValueError):
        DlaCluster(frozenset({(0, 0), (1, 0)}), 3)
    assert not DlaCluster(frozenset({(0, 0), (2, 0)}), 1).is_connected()


def test_capacity_never_decreases_as_bumps_are_added():
    c = hl_grow(HlCluster(alpha=2.0, lambda0=0.1), 60, 6)
    capacities = [
        hl_capacity(HlCluster(c.bumps[:k], c.alpha, c.lambda0))
        for k in range(len(c) + 1)
    ]
    assert capacities[0] == 1.0
    assert np.all(np.diff(capacities) >= 0)


@pytest.mark.slow
def test_hastings_levitov_dimension():
    # area ∝ n λ_0², capacity ∝ area^{1/D}
    sizes = (200, 400, 800, 1600)
    samples = []
    for seed in (11, 12):
        c = hl_grow(HlCluster(alpha=2.0, lambda0=0.25), sizes[-1], seed)
        for n in sizes:
            prefix = HlCluster(c.bumps[:n], c.alpha, c.lambda0)
            samples.append((hl_capacity(prefix), n))
    assert 1.5 <= fit_dimension(samples).exponent <= 1.9


@pytest.mark.slow
def test_dla_dimension():
    samples = [
        (radius_of_gyration(lattice_dla(n, 13)), n + 1)
        for n in (375, 750, 1500, 3000)
    ]
    assert 1.5 <= fit_dimension(samples).exponent <= 1.9

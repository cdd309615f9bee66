import math

import numpy as np
import pytest
from scipy.special import (
    beta,
    betainc,
)

from loewner_lab import (
    Arch,
    DivergentSeries,
    DomainError,
)
from loewner_lab.formulas import (
    arch_partition,
    arch_prob_I,
    arch_prob_II,
    canonical_loop,
    cardy_halfplane,
    cardy_rectangle,
    cardy_triangle,
    cft_data,
    dipolar_exit_density,
    dipolar_in_prob,
    dipolar_left_prob,
    dipolar_left_prob_k4,
    dipolar_right_prob,
    exit_integral_i,
    fk_ising_crossing,
    hitting_prob,
    ising_spin_crossing,
    iter_loops,
    loop_measure_bound,
    loop_measure_total,
    multifractal_f,
    multifractal_tau,
    restriction_prob_semidisc,
    sample_loop_soup,
    spectral_radius,
    unrooted_loop_weight,
    zeta,
    zeta_tilde,
)


# conformal data

@pytest.mark.parametrize("kappa, h12", [
    (3.0, 1 / 2),
    (16 / 3, 1 / 16),
    (8 / 3, 5 / 8),
    (6.0, 0.0),
])
def test_boundary_weight(kappa, h12):
    assert cft_data(kappa).h12 == pytest.approx(h12, abs=1e-15)


def test_restriction_point():
    d = cft_data(8 / 3)
    assert d.c == pytest.approx(0.0, abs=1e-15)
    assert d.d_kappa == pytest.approx(4 / 3)
    assert d.h13 == pytest.approx(2.0)


@pytest.mark.parametrize("kappa", [1.0, 2.0, 3.0, 8 / 3, 4.0])
def test_central_charge_duality(kappa):
    assert cft_data(kappa).c == pytest.approx(cft_data(16 / kappa).c)


def test_n_leg_quantities():
    d = cft_data(6.0)
    assert d.h_1_nplus1(1) == pytest.approx(d.h12)
    assert d.h_1_nplus1(2) == pytest.approx(d.h13)
    assert d.d_kappa_n(2) == pytest.approx(d.d_kappa)


def test_rho_weights():
    d = cft_data(4.0, rho=2.0)
    assert d.h_plus == pytest.approx(2 * 2 / 16)
    assert d.h_minus == pytest.approx(4 * 4 / 16)
    assert "h_plus" not in cft_data(4.0).serialize()
    with pytest.raises(DomainError):
        cft_data(0.0)


def test_intersection_exponents():
    assert zeta(1) == pytest.approx(1 / 8)
    assert zeta(2) == pytest.approx(15 / 24)
    assert zeta_tilde(1) == pytest.approx(1 / 2)
    assert zeta_tilde(2) == pytest.approx(5 / 3)


# crossing and hitting

@pytest.mark.parametrize("x, X, kappa", [
    (1.0, 2.0, 6.0),
    (0.1, 5.0, 5.0),
    (3.0, 3.5, 7.5),
])
def test_hitting_probability_is_an_incomplete_beta(x, X, kappa):
    expected = betainc((kappa - 4) / kappa, (8 - kappa) / kappa, x / X)
    assert hitting_prob(x, X, kappa) == pytest.approx(expected, abs=1e-10)


def test_hitting_probability_limits():
    assert hitting_prob(1e-9, 1.0, 6.0) < 1e-2
    assert hitting_prob(1.0, 1.0 + 1e-9, 6.0) > 0.99
    with pytest.raises(DomainError):
        hitting_prob(1.0, 2.0, 4.0)
    with pytest.raises(DomainError):
        hitting_prob(2.0, 1.0, 6.0)


@pytest.mark.parametrize("a, b, kappa", [
    (-1.0, 1.0, 6.0),
    (-0.3, 2.0, 6.0),
    (-5.0, 0.2, 5.5),
])
def test_cardy_halfplane_symmetry(a, b, kappa):
    total = cardy_halfplane(a, b, kappa) + cardy_halfplane(-b, -a, kappa)
    assert total == pytest.approx(1.0, abs=1e-10)


def test_cardy_halfplane_limits():
    assert cardy_halfplane(0.0, 1.0, 6.0) == pytest.approx(1.0)
    assert cardy_halfplane(-1.0, 1.0, 6.0) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        cardy_halfplane(1.0, 2.0, 6.0)


def test_cardy_rectangle():
    assert cardy_rectangle(1.0) == pytest.approx(0.5, abs=1e-10)
    values = [cardy_rectangle(r) for r in (0.25, 0.5, 1.0, 2.0, 4.0)]
    assert all(a > b for a, b in zip(values, values[1:]))
    # duality between the two crossing directions
    assert cardy_rectangle(2.0) + cardy_rectangle(0.5) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        cardy_rectangle(0.0)


def test_cardy_triangle():
    assert cardy_triangle(0.3) == 0.3
    with pytest.raises(DomainError):
        cardy_triangle(1.2)


# dipolar

def test_exit_integral():
    for kappa in (2.0, 4.0, 6.0):
        assert exit_integral_i(kappa) == pytest.approx(
            2 * beta(2 / kappa, 0.5)
        )


def test_exit_density_is_normalised():
    xs = np.linspace(-60, 60, 601)
    density = np.array([dipolar_exit_density(x, 6.0) for x in xs])
    assert np.sum(density) * (xs[1] - xs[0]) == pytest.approx(1.0, rel=1e-3)


def test_left_passage_on_the_boundaries():
    assert dipolar_left_prob(2.0, 6.0) == pytest.approx(0.0, abs=1e-9)
    assert dipolar_left_prob(-60.0, 6.0) == pytest.approx(1.0, abs=1e-6)
    assert dipolar_left_prob(complex(0, math.pi), 6.0) == pytest.approx(0.5)
    assert dipolar_in_prob(complex(1.0, math.pi), 6.0) == 0.0


@pytest.mark.parametrize("z", [0.5 + 1j, -1 + 2j, 2 + 0.3j])
def test_dipolar_probabilities_sum_to_one(z):
    left = dipolar_left_prob(z, 6.0)
    inside = dipolar_in_prob(z, 6.0)
    right = dipolar_right_prob(z, 6.0)
    assert 0 <= left <= 1 and 0 <= inside <= 1 and 0 <= right <= 1
    assert left + inside + right == pytest.approx(1.0)


@pytest.mark.parametrize("kappa", [4.0, 6.0, 8.0])
def test_dipolar_laws_far_along_the_strip(kappa):
    far = 3000.0
    assert dipolar_left_prob(complex(-far, 1.0), kappa) == pytest.approx(
        1.0, abs=1e-6
    )
    assert dipolar_left_prob(complex(far, 1.0), kappa) == pytest.approx(
        0.0, abs=1e-6
    )
    assert dipolar_left_prob(complex(-far, math.pi), kappa) == 1.0
    assert dipolar_left_prob(complex(far, math.pi), kappa) == 0.0
    assert dipolar_exit_density(far, kappa) == 0.0
    assert dipolar_right_prob(complex(far, 2.0), kappa) == pytest.approx(
        1.0, abs=1e-6
    )


def test_kappa_four_closed_form():
    z = 0.7 + 1.2j
    assert dipolar_left_prob(z, 4.0) == pytest.approx(dipolar_left_prob_k4(z))
    assert dipolar_in_prob(z, 4.0) == 0.0
    top = complex(1.3, math.pi)
    assert dipolar_left_prob(top, 4.0) == pytest.approx(
        dipolar_left_prob_k4(top), abs=1e-9
    )
    assert dipolar_left_prob_k4(-2.0) == 1.0
    assert dipolar_left_prob_k4(2.0) == 0.0


def test_left_passage_needs_the_dense_phase():
    with pytest.raises(DomainError):
        dipolar_left_prob(0.5 + 1j, 3.0)
    with pytest.raises(DomainError):
        dipolar_in_prob(0.5 + 1j, 3.0)
    with pytest.raises(DomainError):
        dipolar_left_prob(0.5 + 4j, 6.0)


# multifractal spectrum

@pytest.mark.parametrize("kappa", [2.0, 8 / 3, 4.0, 6.0])
def test_multifractal_tau(kappa):
    h = 1e-6
    assert multifractal_tau(1.0, kappa) == pytest.approx(0.0, abs=1e-14)
    slope = (multifractal_tau(1 + h, kappa)
             - multifractal_tau(1 - h, kappa)) / (2 * h)
    assert slope == pytest.approx(1.0, abs=1e-6)
    assert multifractal_tau(2.5, kappa) == pytest.approx(
        multifractal_tau(2.5, 16 / kappa)
    )


@pytest.mark.parametrize("kappa", [2.0, 4.0, 6.0])
def test_multifractal_legendre_point(kappa):
    n, h = 2.0, 1e-6
    alpha = (multifractal_tau(n + h, kappa)
             - multifractal_tau(n - h, kappa)) / (2 * h)
    expected = alpha * n - multifractal_tau(n, kappa)
    assert multifractal_f(alpha, kappa) == pytest.approx(expected, abs=1e-6)


def test_multifractal_domain():
    with pytest.raises(DomainError):
        multifractal_f(0.5, 6.0)
    with pytest.raises(DomainError):
        multifractal_tau(-10.0, 6.0)


# restriction

def test_restriction_probability():
    assert restriction_prob_semidisc(2.0, 1.0) == pytest.approx(0.75 ** 0.625)
    assert restriction_prob_semidisc(1.0, 1e-9) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        restriction_prob_semidisc(1.0, 1.0)


# arches

def test_arch_partitions_in_closed_form():
    for x in (0.1, 0.37, 0.8):
        assert arch_partition(x, 4.0, Arch.I) == pytest.approx(
            math.sqrt((1 - x) / x), rel=1e-8
        )
        assert arch_partition(x, 2.0, Arch.I) == pytest.approx(
            (1 - x * x) / (x * x), rel=1e-8
        )
        assert arch_partition(x, 4.0, Arch.II) == pytest.approx(
            arch_partition(1 - x, 4.0, Arch.I)
        )


def test_arch_partition_blows_up_at_the_right_rate():
    kappa = 3.0
    a, b = 1e-3, 1e-4
    ratio = arch_partition(b, kappa, Arch.I) / arch_partition(a, kappa, Arch.I)
    assert ratio == pytest.approx((b / a) ** ((kappa - 6) / kappa), rel=1e-3)


@pytest.mark.parametrize("x", [0.1, 0.3, 0.5, 0.7, 0.95])
def test_arch_probabilities_match_ising_crossings(x):
    assert arch_prob_I(x, 3.0) == pytest.approx(
        ising_spin_crossing(x), abs=1e-8
    )
    assert arch_prob_I(x, 16 / 3) == pytest.approx(
        fk_ising_crossing(x), abs=1e-8
    )


def test_arch_probabilities():
    assert arch_prob_I(0.5, 4.0) == pytest.approx(0.5)
    assert arch_prob_I(0.3, 4.0) + arch_prob_II(0.3, 4.0) == pytest.approx(1)
    assert arch_prob_I(0.3, 4.0, p_I=0.0) == 0.0
    with pytest.raises(DomainError):
        arch_prob_I(0.3, 4.0, p_I=0.0, p_II=0.0)
    with pytest.raises(DomainError):
        arch_partition(1.0, 4.0, Arch.I)
    with pytest.raises(DomainError):
        arch_partition(0.5, 8.0, Arch.I)


# loops

def test_loop_series_matches_the_log_determinant():
    rng = np.random.default_rng(3)
    A = rng.random((4, 4))
    alpha = 0.3 / spectral_radius(A, 1.0)
    lam = 1.5
    exact = -lam * math.log(np.linalg.det(np.eye(4) - alpha * A))
    total = loop_measure_total(A, alpha, lam, 60)
    assert abs(total - exact) <= loop_measure_bound(A, alpha, lam, 60) + 1e-12
    assert total == pytest.approx(exact, rel=1e-12)


def test_truncation_bound_holds_for_short_series():
    A = np.array([[0.0, 1.0], [1.0, 0.0]])
    alpha, lam = 0.5, 1.0
    exact = lam * math.log(4 / 3)
    for n in (1, 2, 5, 10):
        error = abs(loop_measure_total(A, alpha, lam, n) - exact)
        assert error <= loop_measure_bound(A, alpha, lam, n)


def test_divergent_series():
    A = np.ones((2, 2))
    with pytest.raises(DivergentSeries):
        loop_measure_total(A, 0.5, 1.0, 10)
    with pytest.raises(DivergentSeries):
        sample_loop_soup(A, 0.5, 1.0, 3, 0)
    with pytest.raises(DomainError):
        loop_measure_total(-A, 0.1, 1.0, 10)


def test_loop_weights():
    A = np.array([[0.5, 2.0], [3.0, 0.0]])
    alpha, lam = 0.2, 1.5
    assert canonical_loop((1, 0)) == (0, 1)
    assert canonical_loop((2, 0, 1)) == (0, 1, 2)
    assert unrooted_loop_weight((0, 1), A, alpha, lam) == pytest.approx(
        lam * alpha**2 * 6.0
    )
    # (0, 0) is fixed by both rotations
    assert unrooted_loop_weight((0, 0), A, alpha, lam) == pytest.approx(
        lam * alpha**2 * 0.25 / 2
    )
    with pytest.raises(DomainError):
        unrooted_loop_weight((1, 1), A, alpha, lam)


def test_loop_enumeration():
    A = np.ones((2, 2))
    assert len(list(iter_loops(A, 2))) == 5
    assert len(list(iter_loops(A, 3))) == 9
    loops = list(iter_loops(A, 6))
    assert len(loops) == len(set(loops))
    assert all(canonical_loop(loop) == loop for loop in loops)


def test_loop_weights_add_up_to_the_truncated_series():
    rng = np.random.default_rng(7)
    A = rng.random((3, 3))
    alpha = 0.4 / spectral_radius(A, 1.0)
    lam, n_max = 0.7, 6
    total = sum(
        unrooted_loop_weight(loop, A, alpha, lam)
        for loop in iter_loops(A, n_max)
    )
    assert total == pytest.approx(loop_measure_total(A, alpha, lam, n_max))


def test_loop_soup_is_reproducible():
    A = np.array([[0.5, 1.0], [1.0, 0.5]])
    a = sample_loop_soup(A, 0.5, 2.0, 4, 11)
    b = sample_loop_soup(A, 0.5, 2.0, 4, 11)
    assert a == b
    assert all(k > 0 for k in a.values())
    assert set(a) <= set(iter_loops(A, 4))

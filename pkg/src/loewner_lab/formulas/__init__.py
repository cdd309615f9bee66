"""Analytic predictions used as oracles by the Monte Carlo estimators.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .cft import (
    CftData,
    cft_data,
    zeta,
    zeta_tilde,
)
from .crossing import (
    cardy_halfplane,
    cardy_rectangle,
    cardy_triangle,
    hitting_prob,
)
from .dipolar import (
    dipolar_exit_density,
    dipolar_f,
    dipolar_in_prob,
    dipolar_left_prob,
    dipolar_left_prob_k4,
    dipolar_right_prob,
    exit_integral_i,
    hull_integral_j,
)
from .multifractal import (
    multifractal_f,
    multifractal_tau,
)
from .restriction import restriction_prob_semidisc
from .arches import (
    arch_partition,
    arch_prob_I,
    arch_prob_II,
    fk_ising_crossing,
    ising_spin_crossing,
)
from .loops import (
    canonical_loop,
    iter_loops,
    loop_measure_bound,
    loop_measure_total,
    sample_loop_soup,
    spectral_radius,
    unrooted_loop_weight,
)


__all__ = (
    "CftData",
    "cft_data",
    "zeta",
    "zeta_tilde",
    "cardy_halfplane",
    "cardy_rectangle",
    "cardy_triangle",
    "hitting_prob",
    "dipolar_exit_density",
    "dipolar_f",
    "dipolar_in_prob",
    "dipolar_left_prob",
    "dipolar_left_prob_k4",
    "dipolar_right_prob",
    "exit_integral_i",
    "hull_integral_j",
    "multifractal_f",
    "multifractal_tau",
    "restriction_prob_semidisc",
    "arch_partition",
    "arch_prob_I",
    "arch_prob_II",
    "fk_ising_crossing",
    "ising_spin_crossing",
    "canonical_loop",
    "iter_loops",
    "loop_measure_bound",
    "loop_measure_total",
    "sample_loop_soup",
    "spectral_radius",
    "unrooted_loop_weight",
)

"""Non-SLE growth: Laplacian growth, Hastings-Levitov and lattice DLA.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .laplacian import (
    LgPolyState,
    cusp_indicator,
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
)
from .hastings_levitov import (
    HlCluster,
    bump,
    bump_derivative,
    hl_boundary,
    hl_capacity,
    hl_derivative,
    hl_grow,
    hl_map,
)
from .dla import (
    DlaCluster,
    lattice_dla,
    radius_of_gyration,
)


__all__ = (
    "LgPolyState",
    "cusp_indicator",
    "lg_area",
    "lg_conserved",
    "lg_evolve",
    "lg_general_step",
    "lg_rates",
    "lg_velocity",
    "lg_zn_cusp_time",
    "lg_zn_evolve",
    "lg_zn_state",
    "lg_zn_time_of_radius",
    "HlCluster",
    "bump",
    "bump_derivative",
    "hl_boundary",
    "hl_capacity",
    "hl_derivative",
    "hl_grow",
    "hl_map",
    "DlaCluster",
    "lattice_dla",
    "radius_of_gyration",
)

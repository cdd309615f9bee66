"""Discrete interface models.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .hexagonal import (
    HexDomain,
    InterfacePath,
    center,
    explore,
)
from .percolation import (
    path_distribution,
    percolation_interface,
    step_counts,
    triangle_crossing,
)
from .navigator import navigator_interface
from .walks import (
    LatticeWalk,
    SquareDomain,
    altitude_lengths,
    enumerate_lerw,
    lerw_domain,
    lerw_halfplane,
    lerw_reflecting,
    loop_erase,
    pivot_chain,
    saw_pivot,
    straight_walk,
)


__all__ = (
    "HexDomain",
    "InterfacePath",
    "center",
    "explore",
    "path_distribution",
    "percolation_interface",
    "step_counts",
    "triangle_crossing",
    "navigator_interface",
    "LatticeWalk",
    "SquareDomain",
    "altitude_lengths",
    "enumerate_lerw",
    "lerw_domain",
    "lerw_halfplane",
    "lerw_reflecting",
    "loop_erase",
    "pivot_chain",
    "saw_pivot",
    "straight_walk",
)

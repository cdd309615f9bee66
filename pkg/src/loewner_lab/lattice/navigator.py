"""The harmonic navigator and its variants.

Each inner hexagon met by the tip gets its colour from an auxiliary
process started at that hexagon:

- ``harmonic``: a cell-to-cell symmetric random walk, absorbed by every
  coloured cell (boundary or previously decided); the hexagon takes the
  colour where the walk is absorbed.
- ``anti``: the same walk, opposite colour.
- ``percolation_nav``: a percolation exploration launched from the tip
  on temporary coin tosses; the hexagon takes the colour of the first
  coloured cell that exploration meets.
- ``boundary_harmonic``: the walk is absorbed only by the initial
  boundary and ignores the interface.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging

from ..enums import (
    Color,
    NavigatorVariant,
)
from ..rng import (
    IntPool,
    Seed,
    as_generator,
)
from .hexagonal import (
    DIRECTIONS,
    Cell,
    Edge,
    HexDomain,
    InterfacePath,
    ahead,
    explore,
)

logger = logging.getLogger(__name__)


def _walk(
    domain: HexDomain,
    start: Cell,
    colors: dict[Cell, Color],
    pool: IntPool,
    use_interface: bool,
) -> Color:
    q, r = start
    while True:
        dq, dr = DIRECTIONS[pool.next()]
        q, r = q + dq, r + dr
        cell = (q, r)
        color = domain.boundary_color(cell)
        if color is not Color.undecided:
            return color
        if use_interface:
            color = colors.get(cell, Color.undecided)
            if color is not Color.undecided:
                return color


def _percolation_scout(
    domain: HexDomain,
    edge: Edge,
    colors: dict[Cell, Color],
    pool: IntPool,
) -> Color:
    cells = domain.cells
    left, right = edge
    temporary: dict[Cell, Color] = {}
    while True:
        x = ahead(left, right)
        if x not in cells:
            # reached b on temporary colours only
            return Color.black if pool.next() % 2 else Color.white
        color = domain.boundary_color(x)
        if color is Color.undecided:
            color = colors.get(x, Color.undecided)
        if color is not Color.undecided:
            return color
        color = temporary.get(x)
        if color is None:
            color = Color.black if pool.next() % 2 else Color.white
            temporary[x] = color
        if color is Color.black:
            left = x
        else:
            right = x


def navigator_interface(
    d: HexDomain,
    seed: Seed,
    variant: NavigatorVariant = NavigatorVariant.harmonic,
) -> InterfacePath:
    """Grow a navigator interface from ``a`` to ``b``."""
    variant = NavigatorVariant(variant)
    pool = IntPool(as_generator(seed), 6)

    def decide(cell: Cell, edge: Edge, colors: dict[Cell, Color]) -> Color:
        if variant is NavigatorVariant.percolation_nav:
            return _percolation_scout(d, edge, colors, pool)
        color = _walk(
            d, cell, colors, pool,
            use_interface=variant is not NavigatorVariant.boundary_harmonic,
        )
        if variant is NavigatorVariant.anti:
            return color.opposite
        return color

    path = explore(d, decide)
    logger.debug("%s navigator: %d edges", variant, path.length)
    return path

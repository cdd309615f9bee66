"""Hexagonal domains and the exploration process.

Cells are hexagons in axial coordinates ``(q, r)``; their centres form a
triangular lattice with ``center(q, r) = sqrt(3)(q + r/2) + 1.5 r i``. A
vertex of the honeycomb is the meeting point of three mutually adjacent
cells and an edge is the common side of two adjacent cells.

An interface is explored edge by edge. The current edge has a black cell
``L`` on its left and a white cell ``R`` on its right; the cell ``X``
ahead decides the next edge: a black ``X`` replaces ``L``, a white one
replaces ``R``. Exploration stops when ``X`` lies outside the domain,
which only happens at the far junction ``b`` of the two boundary arcs.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import math
import logging
import dataclasses
from typing import (
    Optional,
    Union,
)
from collections.abc import (
    Callable,
    Iterable,
    Mapping,
)
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

import numpy as np

from .._export import (
    SvgCanvas,
    Target,
    write_csv,
    write_text,
)
from ..enums import Color

logger = logging.getLogger(__name__)

Cell = tuple[int, int]
Edge = tuple[Cell, Cell]

# counter-clockwise
DIRECTIONS: tuple[Cell, ...] = (
    (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1),
)
_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}
_SQRT3 = math.sqrt(3.0)


def center(cell: Cell) -> complex:
    q, r = cell
    return complex(_SQRT3 * (q + r / 2), 1.5 * r)


def neighbors(cell: Cell) -> list[Cell]:
    q, r = cell
    return [(q + dq, r + dr) for dq, dr in DIRECTIONS]


def _shift(cell: Cell, k: int) -> Cell:
    dq, dr = DIRECTIONS[k % 6]
    return (cell[0] + dq, cell[1] + dr)


def _direction(left: Cell, right: Cell) -> int:
    try:
        return _INDEX[(right[0] - left[0], right[1] - left[1])]
    except KeyError:
        raise ValueError(f"cells {left} and {right} are not adjacent")


def ahead(left: Cell, right: Cell) -> Cell:
    """The third cell of the vertex in front of the edge ``(L, R)``."""
    return _shift(left, _direction(left, right) + 1)


def behind(left: Cell, right: Cell) -> Cell:
    return _shift(left, _direction(left, right) - 1)


def vertex(a: Cell, b: Cell, c: Cell) -> complex:
    """Honeycomb vertex shared by three mutually adjacent cells."""
    return (center(a) + center(b) + center(c)) / 3


@dataclasses.dataclass(eq=False, frozen=True)
class HexDomain:
    """A hexagonal domain with an admissible boundary condition.

    Args:
        inner: Undecided cells.
        black: Boundary cells on the left arc (from ``a`` to ``b``).
        white: Boundary cells on the right arc.
        start: First edge ``(L, R)`` of every interface, at ``a``.

    """
    inner: frozenset[Cell]
    black: frozenset[Cell]
    white: frozenset[Cell]
    start: Edge

    def __post_init__(self) -> None:
        for name in ("inner", "black", "white"):
            object.__setattr__(
                self, name, frozenset(map(tuple, getattr(self, name)))
            )
        if self.inner & self.black or self.inner & self.white \
                or self.black & self.white:
            raise ValueError("inner, black and white cells must be disjoint")
        left, right = self.start
        if left not in self.black or right not in self.white:
            raise ValueError("start edge must have black left, white right")
        _direction(left, right)
        cells = self.cells
        for cell in self.inner:
            if any(n not in cells for n in neighbors(cell)):
                raise ValueError(f"inner cell {cell} touches the outside")
        if behind(left, right) in cells:
            raise ValueError("start edge must lie on the outer boundary")

    @property
    def cells(self) -> frozenset[Cell]:
        return self.inner | self.black | self.white

    @property
    def a(self) -> complex:
        left, right = self.start
        return vertex(left, right, behind(left, right))

    def boundary_color(self, cell: Cell) -> Color:
        if cell in self.black:
            return Color.black
        if cell in self.white:
            return Color.white
        return Color.undecided

    @classmethod
    def from_cells(
        cls,
        inner: Iterable[Cell],
        split: Optional[float] = None,
    ) -> Self:
        """Surround ``inner`` by a ring of boundary cells.

        Ring cells left of the vertical line ``x = split`` are black and
        the others white, so ``a`` sits at the bottom crossing of the line
        and ``b`` at the top one. ``split`` defaults to the mean centre of
        the inner cells, moved to the nearest half lattice column.

        """
        inner = frozenset(inner)
        if not inner:
            raise ValueError("need at least one inner cell")
        if split is None:
            mean = float(np.mean([center(c).real for c in inner]))
            half = _SQRT3 / 2
            split = half * (math.floor(mean / half) + 0.5)
        ring = {
            n for c in inner for n in neighbors(c) if n not in inner
        }
        black = frozenset(c for c in ring if center(c).real < split)
        white = frozenset(ring - black)
        return cls(inner, black, white, _find_start(inner, black, white))

    @classmethod
    def strip(cls, width: int, height: int) -> Self:
        """A ``width`` x ``height`` rectangle, ``a`` and ``b`` at the
        middles of its bottom and top sides.

        """
        if width < 1 or height < 1:
            raise ValueError("width and height must be positive")
        inner = {
            (col - r // 2, r) for r in range(height) for col in range(width)
        }
        return cls.from_cells(inner, split=_SQRT3 / 2 * (width - 0.5))


def _find_start(
    inner: frozenset[Cell], black: frozenset[Cell], white: frozenset[Cell]
) -> Edge:
    cells = inner | black | white
    candidates = []
    for left in black:
        for k in range(6):
            right = _shift(left, k)
            if right not in white:
                continue
            ahead, back = _shift(left, k + 1), _shift(left, k - 1)
            if ahead in cells and back not in cells:
                candidates.append((left, right))
    if not candidates:
        raise ValueError("boundary arcs admit no interface")

    def height(edge: Edge) -> tuple[float, float]:
        v = vertex(*edge, behind(*edge))
        return v.imag, v.real

    return min(candidates, key=height)


@dataclasses.dataclass(eq=False, frozen=True)
class InterfacePath:
    """An explored interface from ``a`` to ``b``.

    Args:
        vertices: Honeycomb vertices visited, starting with ``a`` and
            ending with ``b``.
        edges: The ``(black, white)`` cell pairs of the edges crossed.
        colors: Colours given to inner cells during the exploration.

    """
    vertices: np.ndarray
    edges: tuple[Edge, ...]
    colors: Mapping[Cell, Color]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def tosses(self) -> int:
        return len(self.colors)

    @property
    def key(self) -> tuple[Edge, ...]:
        return self.edges

    def touched(self, domain: HexDomain) -> frozenset[Cell]:
        """Inner cells adjacent to the path."""
        return frozenset(
            c for e in self.edges for c in e if c in domain.inner
        )

    def to_csv(self, target: Target) -> None:
        write_csv(
            target,
            ("step", "x", "y"),
            ((i, v.real, v.imag) for i, v in enumerate(self.vertices)),
        )

    def to_svg(
        self,
        target: Target,
        domain: HexDomain,
        canvas: SvgCanvas = SvgCanvas(),
    ) -> None:
        palette = {
            Color.black: "#222", Color.white: "#fff",
            Color.undecided: "#ccc",
        }
        cells = sorted(domain.cells)
        fills = [
            palette[self.colors.get(c, domain.boundary_color(c))]
            for c in cells
        ]
        write_text(
            target,
            canvas.hexagons([center(c) for c in cells], fills, self.vertices),
        )


Decider = Callable[[Cell, Edge, dict[Cell, Color]], Color]


def explore(
    domain: HexDomain,
    decide: Union[Decider, Mapping[Cell, Color]],
) -> InterfacePath:
    """Run the exploration process.

    Args:
        domain: The domain.
        decide: Either a full colouring of the inner cells or a callback
            ``decide(cell, edge, colors)`` asked once for each inner cell
            the first time it is met; ``colors`` holds the decisions made
            so far and must not be modified.

    """
    if isinstance(decide, Mapping):
        coloring = decide
        decide = lambda cell, edge, colors: coloring[cell]  # noqa: E731

    colors: dict[Cell, Color] = {}
    cells = domain.cells
    left, right = domain.start
    vertices = [domain.a]
    edges: list[Edge] = []
    limit = 2 * len(cells) + 8

    while True:
        x = ahead(left, right)
        edges.append((left, right))
        vertices.append(vertex(left, right, x))
        if x not in cells:
            break
        if len(edges) > limit:
            raise RuntimeError("exploration did not terminate")
        color = domain.boundary_color(x)
        if color is Color.undecided:
            color = colors.get(x, Color.undecided)
            if color is Color.undecided:
                color = Color(decide(x, (left, right), colors))
                colors[x] = color
        if color is Color.black:
            left = x
        else:
            right = x

    return InterfacePath(np.array(vertices), tuple(edges), colors)

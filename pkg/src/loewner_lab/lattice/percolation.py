"""Critical site percolation on hexagons.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
import itertools
from collections import (
    Counter,
    deque,
)

import numpy as np

from ..enums import Color
from ..rng import (
    Seed,
    as_generator,
    substream,
)
from .hexagonal import (
    Cell,
    Edge,
    HexDomain,
    InterfacePath,
    explore,
    neighbors,
)

logger = logging.getLogger(__name__)


def percolation_interface(d: HexDomain, seed: Seed) -> InterfacePath:
    """Grow the percolation interface from ``a`` to ``b``.

    Each inner hexagon is coloured by a fair coin the first time the tip
    touches it, and never again.

    """
    rng = as_generator(seed)

    def toss(cell: Cell, edge: Edge, colors: dict) -> Color:
        return Color.black if rng.random() < 0.5 else Color.white

    return explore(d, toss)


def path_distribution(d: HexDomain) -> dict[tuple[Edge, ...], float]:
    """Exact law of the interface by enumerating all colourings.

    Only usable on domains with a handful of inner cells.

    """
    inner = sorted(d.inner)
    law: Counter = Counter()
    weight = 0.5 ** len(inner)
    colors = (Color.black, Color.white)
    for choice in itertools.product(colors, repeat=len(inner)):
        path = explore(d, dict(zip(inner, choice)))
        law[path.key] += weight
    return dict(law)


def triangle_crossing(
    side: int, x: float, seed: Seed
) -> bool:
    """Crossing event in an equilateral triangle.

    Sites of the triangular lattice (hexagon cells) ``q, r >= 0``,
    ``q + r <= side`` are open with probability 1/2; the bottom side
    ``r = 0`` is open. Returns whether an open path joins the bottom side
    to the part of the left side ``q = 0`` within distance ``x`` of the
    apex. In the scaling limit the probability is ``x``.

    """
    if side < 2:
        raise ValueError("side must be at least 2")
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    rng = as_generator(seed)
    n = side + 1
    open_ = rng.random((n, n)) < 0.5
    open_[:, 0] = True
    target_from = (1 - x) * side

    queue = deque((q, 0) for q in range(n))
    seen = set(queue)
    while queue:
        q, r = queue.popleft()
        if q == 0 and r >= target_from:
            return True
        for nq, nr in neighbors((q, r)):
            if nq < 0 or nr < 0 or nq + nr > side or (nq, nr) in seen:
                continue
            if open_[nq, nr]:
                seen.add((nq, nr))
                queue.append((nq, nr))
    return False


def step_counts(
    sizes, samples: int, seed: int, sampler=percolation_interface
) -> dict[int, np.ndarray]:
    """Interface lengths on ``L x L`` domains for each size ``L``."""
    out = {}
    for size in sizes:
        d = HexDomain.strip(size, size)
        out[size] = np.array([
            sampler(d, substream(seed, size * 1_000_003 + i)).length
            for i in range(samples)
        ])
        logger.debug(
            "size %d: mean length %.1f", size, out[size].mean()
        )
    return out

"""On-lattice diffusion-limited aggregation.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
import dataclasses

import numpy as np
from scipy.stats import wrapcauchy

from .._export import (
    SvgCanvas,
    Target,
    write_csv,
    write_text,
)
from ..rng import (
    IntPool,
    Seed,
    as_generator,
)

logger = logging.getLogger(__name__)

Site = tuple[int, int]

STEPS: tuple[Site, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))
LAUNCH_MARGIN = 5.0


@dataclasses.dataclass(eq=False, frozen=True)
class DlaCluster:
    """A connected set of square-lattice sites containing the origin.

    Args:
        occupied: The sites.
        particle_count: Number of particles attached to the seed.

    """
    occupied: frozenset[Site]
    particle_count: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "occupied", frozenset(self.occupied))
        if (0, 0) not in self.occupied:
            raise ValueError("cluster must contain the origin")
        if len(self.occupied) != self.particle_count + 1:
            raise ValueError("particle_count must match the occupied sites")

    @property
    def sites(self) -> np.ndarray:
        return np.array(sorted(self.occupied), dtype=np.int64).reshape(-1, 2)

    @property
    def radius(self) -> float:
        return float(np.max(np.hypot(*self.sites.T)))

    def is_connected(self) -> bool:
        seen = {(0, 0)}
        stack = [(0, 0)]
        while stack:
            x, y = stack.pop()
            for dx, dy in STEPS:
                nb = (x + dx, y + dy)
                if nb in self.occupied and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.occupied)

    def to_csv(self, target: Target) -> None:
        write_csv(target, ("x", "y"), self.sites.tolist())

    def to_svg(self, target: Target, canvas: SvgCanvas = SvgCanvas()) -> None:
        s = self.sites
        write_text(target, canvas.scatter(s[:, 0] + 1j * s[:, 1]))


def radius_of_gyration(c: DlaCluster) -> float:
    s = c.sites.astype(float)
    return float(np.sqrt(np.mean(np.sum((s - s.mean(axis=0)) ** 2, axis=1))))


def _on_circle(cx: float, cy: float, r: float, phi: float) -> Site:
    return (
        int(np.rint(cx + r * math.cos(phi))),
        int(np.rint(cy + r * math.sin(phi))),
    )


def lattice_dla(n_particles: int, seed: Seed) -> DlaCluster:
    """Grow a cluster of ``n_particles`` random walkers.

    Walkers start uniformly on a circle of radius ``R_max + 5`` and stick
    on first reaching a site next to the cluster. Far from the cluster a
    walker jumps uniformly onto the circle of radius ``d - 1`` around
    itself, ``d`` being its distance to the cluster's bounding circle.
    Walkers beyond twice the launch radius are returned to the launch
    circle with the exact harmonic measure (a wrapped Cauchy law).

    """
    if n_particles < 1:
        raise ValueError("n_particles must be at least 1")
    rng = as_generator(seed)
    pool = IntPool(rng, 4)
    occupied: set[Site] = {(0, 0)}
    r_max = 0.0

    def touches(x: int, y: int) -> bool:
        return any((x + dx, y + dy) in occupied for dx, dy in STEPS)

    for particle in range(n_particles):
        launch = r_max + LAUNCH_MARGIN
        x, y = _on_circle(0.0, 0.0, launch, rng.uniform(0, 2 * math.pi))
        while True:
            r = math.hypot(x, y)
            if r > 2 * launch:
                offset = wrapcauchy.rvs(launch / r, random_state=rng)
                x, y = _on_circle(0.0, 0.0, launch, math.atan2(y, x) + offset)
            elif r - r_max > 4:
                jump = r - r_max - 2
                x, y = _on_circle(x, y, jump, rng.uniform(0, 2 * math.pi))
            else:
                dx, dy = STEPS[pool.next()]
                x, y = x + dx, y + dy
            if (x, y) not in occupied and touches(x, y):
                break
        occupied.add((x, y))
        r_max = max(r_max, math.hypot(x, y))
        if particle % 500 == 499:
            logger.debug(
                "dla: %d particles, radius %.1f", particle + 1, r_max
            )

    return DlaCluster(frozenset(occupied), n_particles)

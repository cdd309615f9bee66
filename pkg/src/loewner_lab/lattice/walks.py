"""Loop-erased and self-avoiding walks on the square lattice.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import logging
import dataclasses
from collections import defaultdict
from collections.abc import (
    Hashable,
    Iterable,
    Sequence,
)
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self
from typing import TypeVar

import numpy as np

from .._export import (
    Target,
    write_csv,
)
from ..enums import (
    SizeProxy,
    WalkMode,
)
from ..rng import (
    IntPool,
    Seed,
    as_generator,
    substream,
)

logger = logging.getLogger(__name__)

Site = tuple[int, int]
T = TypeVar("T", bound=Hashable)

STEPS: tuple[Site, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))

# the eight point symmetries of the square lattice
SYMMETRIES = np.array([
    [[1, 0], [0, 1]],
    [[0, -1], [1, 0]],
    [[-1, 0], [0, -1]],
    [[0, 1], [-1, 0]],
    [[1, 0], [0, -1]],
    [[-1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, -1], [-1, 0]],
])


@dataclasses.dataclass(eq=False, frozen=True)
class LatticeWalk:
    """A nearest-neighbour walk.

    Args:
        sites: Integer array of shape ``(n + 1, 2)``.
        mode: Boundary behaviour of the walk that produced it.

    """
    sites: np.ndarray
    mode: WalkMode = WalkMode.reflecting

    def __post_init__(self) -> None:
        sites = np.array(self.sites, dtype=np.int64).reshape(-1, 2)
        sites.setflags(write=False)
        object.__setattr__(self, "sites", sites)
        object.__setattr__(self, "mode", WalkMode(self.mode))
        if sites.shape[0] == 0:
            raise ValueError("a walk needs at least one site")
        if np.any(np.abs(np.diff(sites, axis=0)).sum(axis=1) != 1):
            raise ValueError("consecutive sites must be adjacent")

    @property
    def length(self) -> int:
        return self.sites.shape[0] - 1

    @property
    def end_to_end(self) -> float:
        return float(np.hypot(*(self.sites[-1] - self.sites[0])))

    @property
    def max_altitude(self) -> int:
        return int(self.sites[:, 1].max())

    @property
    def key(self) -> tuple[Site, ...]:
        return tuple(map(tuple, self.sites.tolist()))

    def size(self, proxy: SizeProxy = SizeProxy.end_to_end) -> float:
        """Linear size of the walk under the chosen proxy."""
        if SizeProxy(proxy) is SizeProxy.max_altitude:
            return float(self.max_altitude)
        return self.end_to_end

    def is_self_avoiding(self) -> bool:
        return len(set(self.key)) == self.sites.shape[0]

    def to_csv(self, target: Target) -> None:
        write_csv(target, ("x", "y"), self.sites.tolist())


def straight_walk(n: int) -> LatticeWalk:
    """The walk ``(0, 0), (1, 0), ..., (n, 0)``."""
    return LatticeWalk(np.column_stack([np.arange(n + 1), np.zeros(n + 1)]))


class _Eraser:
    """Chronological loop erasure, one token at a time."""
    __slots__ = ("path", "position")

    def __init__(self) -> None:
        self.path: list = []
        self.position: dict = {}

    def push(self, token) -> None:
        k = self.position.get(token)
        if k is None:
            self.position[token] = len(self.path)
            self.path.append(token)
            return
        for dropped in self.path[k + 1:]:
            del self.position[dropped]
        del self.path[k + 1:]


def loop_erase(seq: Iterable[T]) -> list[T]:
    """Erase loops in the order they are closed.

    Repeatedly finds the first index ``m`` whose term already appeared
    at some ``l < m`` and removes the terms ``l + 1 .. m``.

    """
    eraser = _Eraser()
    for token in seq:
        eraser.push(token)
    if not eraser.path:
        raise ValueError("sequence must be nonempty")
    return eraser.path


def lerw_halfplane(n: int, seed: Seed) -> LatticeWalk:
    """Loop-erased walk conditioned to avoid the real axis.

    The horizontal coordinate is a symmetric walk and the altitude a
    discrete 3d Bessel walk (from ``m``, up with probability
    ``(1 + 1/m)/2``). The walk starts at the origin, steps to ``(0, 1)``
    and stops on first reaching altitude ``n``.

    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = as_generator(seed)
    eraser = _Eraser()
    eraser.push((0, 0))
    x, y = 0, 1
    eraser.push((x, y))
    block = 1 << 14
    u = rng.random(block).tolist()
    cursor = 0
    while y < n:
        if cursor + 2 > block:
            u = rng.random(block).tolist()
            cursor = 0
        a, b = u[cursor], u[cursor + 1]
        cursor += 2
        if a < 0.5:
            x += 1 if b < 0.5 else -1
        else:
            y += 1 if b < (1 + 1 / y) / 2 else -1
        eraser.push((x, y))
    return LatticeWalk(eraser.path, WalkMode.bessel3)


def lerw_reflecting(n_steps: int, seed: Seed) -> LatticeWalk:
    """Loop-erased walk in the upper half plane with reflection at y = 0.

    The underlying walk starts at the origin; a step below the axis is
    reflected upwards. Stops the first time the erased path has
    ``n_steps`` steps.

    """
    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    pool = IntPool(as_generator(seed), 4)
    eraser = _Eraser()
    x, y = 0, 0
    eraser.push((x, y))
    while len(eraser.path) <= n_steps:
        dx, dy = STEPS[pool.next()]
        x, y = x + dx, abs(y + dy)
        eraser.push((x, y))
    return LatticeWalk(eraser.path, WalkMode.reflecting)


@dataclasses.dataclass(eq=False, frozen=True)
class SquareDomain:
    """A finite square-lattice domain with boundary points ``a``, ``b``.

    Args:
        inner: Interior sites.
        a: Starting boundary site (outside ``inner``).
        b: Target boundary site (outside ``inner``).

    """
    inner: frozenset[Site]
    a: Site
    b: Site

    def __post_init__(self) -> None:
        object.__setattr__(self, "inner", frozenset(map(tuple, self.inner)))
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.a == self.b:
            raise ValueError("a and b must be distinct")
        for name in ("a", "b"):
            site = getattr(self, name)
            if site in self.inner:
                raise ValueError(f"{name} must lie outside the domain")
            if not any(_add(site, s) in self.inner for s in STEPS):
                raise ValueError(f"{name} must touch the domain")

    @classmethod
    def rectangle(cls, width: int, height: int) -> Self:
        """``width x height`` block, ``a`` below its bottom-left site and
        ``b`` above its top-right site.

        """
        inner = {(i, j) for i in range(width) for j in range(height)}
        return cls(inner, (0, -1), (width - 1, height))


def _add(site: Site, step: Site) -> Site:
    return (site[0] + step[0], site[1] + step[1])


def lerw_domain(d: SquareDomain, seed: Seed) -> LatticeWalk:
    """Loop-erased walk from ``a`` to ``b`` with annihilating boundary.

    Walks touching the boundary anywhere but ``b`` are discarded and
    restarted from ``a``.

    """
    pool = IntPool(as_generator(seed), 4)
    restarts = 0
    while True:
        eraser = _Eraser()
        site = d.a
        eraser.push(site)
        while True:
            site = _add(site, STEPS[pool.next()])
            if site == d.b:
                eraser.push(site)
                if restarts:
                    logger.debug("annihilating walk: %d restarts", restarts)
                return LatticeWalk(eraser.path, WalkMode.annihilating)
            if site not in d.inner:
                restarts += 1
                break
            eraser.push(site)


def enumerate_lerw(
    d: SquareDomain, cutoff: int
) -> tuple[dict[tuple[Site, ...], float], float]:
    """Exact law of `lerw_domain` from walks of length ``<= cutoff``.

    Every walk of length ``l`` has weight ``4^-l``; walks are grouped by
    their loop erasure, which evolves as a Markov chain.

    Returns:
        The normalised law and the total weight of walks still alive at
        the cutoff (a bound on the truncation error before
        normalisation).

    """
    states: dict[tuple[Site, ...], float] = {(d.a,): 1.0}
    law: dict[tuple[Site, ...], float] = defaultdict(float)
    for _ in range(cutoff):
        nxt: dict[tuple[Site, ...], float] = defaultdict(float)
        for path, weight in states.items():
            w = weight / 4
            for step in STEPS:
                site = _add(path[-1], step)
                if site == d.b:
                    law[path + (site,)] += w
                elif site in d.inner:
                    if site in path:
                        nxt[path[:path.index(site) + 1]] += w
                    else:
                        nxt[path + (site,)] += w
        states = nxt
    total = sum(law.values())
    if total == 0:
        raise ValueError("no walk reaches b within the cutoff")
    return {k: v / total for k, v in law.items()}, sum(states.values())


def saw_pivot(walk: LatticeWalk, seed: Seed) -> LatticeWalk:
    """One pivot move.

    A pivot site and one of the eight lattice symmetries fixing it are
    drawn uniformly; the symmetry is applied to the part of the walk
    after the pivot. A move creating a self-intersection is rejected and
    the input walk is returned.

    """
    rng = as_generator(seed)
    sites = walk.sites
    k = int(rng.integers(sites.shape[0]))
    g = SYMMETRIES[int(rng.integers(8))]
    if k == sites.shape[0] - 1 or (g == SYMMETRIES[0]).all():
        return walk
    pivot = sites[k]
    tail = (sites[k + 1:] - pivot) @ g.T + pivot
    head = set(map(tuple, sites[:k + 1].tolist()))
    if any(site in head for site in map(tuple, tail.tolist())):
        return walk
    return LatticeWalk(np.vstack([sites[:k + 1], tail]), walk.mode)


def pivot_chain(
    walk: LatticeWalk, steps: int, seed: Seed
) -> Iterable[LatticeWalk]:
    """Yield the walk after each of ``steps`` pivot moves."""
    rng = as_generator(seed)
    for _ in range(steps):
        walk = saw_pivot(walk, rng)
        yield walk


def altitude_lengths(
    altitudes: Sequence[int], samples: int, seed: int
) -> dict[int, np.ndarray]:
    """Lengths of `lerw_halfplane` samples for each target altitude."""
    return {
        n: np.array([
            lerw_halfplane(n, substream(seed, n * 1_000_003 + i)).length
            for i in range(samples)
        ])
        for n in altitudes
    }

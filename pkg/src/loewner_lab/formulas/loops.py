"""Loop measures and loop soups on finite weighted graphs.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from collections.abc import (
    Iterator,
    Sequence,
)

import numpy as np

from ..errors import (
    DivergentSeries,
    DomainError,
)
from ..rng import (
    Seed,
    as_generator,
)

logger = logging.getLogger(__name__)

Loop = tuple[int, ...]


def _matrix(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError("A must be a square matrix")
    if np.any(A < 0):
        raise DomainError("A must be non-negative")
    return A


def spectral_radius(A: np.ndarray, alpha: float) -> float:
    return float(np.max(np.abs(np.linalg.eigvals(alpha * _matrix(A)))))


def loop_measure_total(
    A: np.ndarray, alpha: float, lam: float, n_max: int
) -> float:
    """Truncated total mass ``λ Σ_{n<=n_max} (α^n/n) Tr A^n``.

    The full series equals ``-λ log det(1 - αA)``.

    Raises:
        DivergentSeries: The spectral radius of ``αA`` is at least 1.

    """
    M = alpha * _matrix(A)
    radius = spectral_radius(A, alpha)
    if radius >= 1:
        raise DivergentSeries(radius)
    total = 0.0
    power = np.eye(M.shape[0])
    for n in range(1, n_max + 1):
        power = power @ M
        total += np.trace(power) / n
    return lam * total


def loop_measure_bound(
    A: np.ndarray, alpha: float, lam: float, n_max: int
) -> float:
    """Bound on the tail dropped by `loop_measure_total`,
    ``λ d ρ^{n+1} / ((n+1)(1-ρ))`` with ``d`` the number of vertices.

    """
    radius = spectral_radius(A, alpha)
    if radius >= 1:
        raise DivergentSeries(radius)
    d = np.shape(A)[0]
    return lam * d * radius ** (n_max + 1) / ((n_max + 1) * (1 - radius))


def canonical_loop(cycle: Sequence[int]) -> Loop:
    """Lexicographically smallest rotation: one representative per
    unrooted loop.

    """
    cycle = tuple(int(v) for v in cycle)
    return min(cycle[k:] + cycle[:k] for k in range(len(cycle)))


def _period(cycle: Loop) -> int:
    n = len(cycle)
    for k in range(1, n + 1):
        if n % k == 0 and cycle[k:] + cycle[:k] == cycle:
            return k
    return n


def unrooted_loop_weight(
    cycle: Sequence[int], A: np.ndarray, alpha: float, lam: float
) -> float:
    """``λ α^n ∏ A_{v_i v_{i+1}} / |Aut|`` for the loop visiting
    ``cycle`` in order and closing up.

    ``|Aut|`` counts the rotations fixing the sequence.

    """
    A = _matrix(A)
    cycle = tuple(int(v) for v in cycle)
    n = len(cycle)
    if n == 0:
        raise DomainError("a loop needs at least one vertex")
    edges = A[list(cycle), list(cycle[1:] + cycle[:1])]
    if np.any(edges <= 0):
        raise DomainError("every step of the loop needs a positive weight")
    return lam * alpha ** n * float(np.prod(edges)) * _period(cycle) / n


def iter_loops(A: np.ndarray, n_max: int) -> Iterator[Loop]:
    """Yield every unrooted loop of length ``<= n_max`` once, as its
    canonical rotation.

    """
    A = _matrix(A)
    d = A.shape[0]
    succ = [np.flatnonzero(A[v] > 0).tolist() for v in range(d)]

    def extend(path: list[int]) -> Iterator[Loop]:
        if path[0] in succ[path[-1]]:
            loop = tuple(path)
            if canonical_loop(loop) == loop:
                yield loop
        if len(path) == n_max:
            return
        for v in succ[path[-1]]:
            # canonical loops start at their smallest vertex
            if v >= path[0]:
                path.append(v)
                yield from extend(path)
                path.pop()

    for root in range(d):
        yield from extend([root])


def sample_loop_soup(
    A: np.ndarray,
    alpha: float,
    lam: float,
    n_max: int,
    seed: Seed,
) -> dict[Loop, int]:
    """Poisson loop soup of intensity `unrooted_loop_weight`, restricted
    to loops of length ``<= n_max``.

    Returns:
        Loops with a positive multiplicity.

    """
    radius = spectral_radius(A, alpha)
    if radius >= 1:
        raise DivergentSeries(radius)
    rng = as_generator(seed)
    loops = list(iter_loops(A, n_max))
    means = np.array([unrooted_loop_weight(l, A, alpha, lam) for l in loops])
    counts = rng.poisson(means)
    logger.debug("loop soup: %d loops, %d drawn", len(loops), counts.sum())
    return {l: int(k) for l, k in zip(loops, counts.tolist()) if k}

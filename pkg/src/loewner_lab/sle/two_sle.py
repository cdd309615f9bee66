"""The two-curve SLE system with equal growth speeds.

The two driven points move under ``dX_i = sqrt(κ a_i) dB_i + drift_i dt``
with the drift of the Loewner chain with two simple poles and weight
``Z = (X2 − X1)^Δ``. The gap is a Bessel process of dimension
``1 + 2(κΔ + 2)/κ``: ``Δ = (κ − 6)/κ`` collides (the curves pair up) while
``Δ = 2/κ`` escapes (both curves go to infinity).

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
import dataclasses
import sys
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

import numpy as np

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..rng import substream

logger = logging.getLogger(__name__)

_GAP_CAP = 1e-4


@dataclasses.dataclass(eq=False, frozen=True)
class TwoSleState:
    """State of the two driven points.

    Args:
        x1: Left driven point.
        x2: Right driven point.
        delta: Exponent Δ of ``Z = (X2 − X1)^Δ``.
        a1: Growth speed of the left curve.
        a2: Growth speed of the right curve.
        t: Elapsed time.
        collided: Terminal flag, set once the gap fell below
            ``eps_collide``.

    """
    x1: float
    x2: float
    delta: float
    a1: float = 0.5
    a2: float = 0.5
    t: float = 0.0
    collided: bool = False

    def __post_init__(self) -> None:
        if not self.collided and not self.x1 < self.x2:
            raise ValueError("x1 must be smaller than x2")
        if self.a1 < 0 or self.a2 < 0 or not math.isclose(
            self.a1 + self.a2, 1.0
        ):
            raise ValueError("speeds must be non-negative and sum to 1")

    @property
    def gap(self) -> float:
        return self.x2 - self.x1

    def drift(self, kappa: float) -> tuple[float, float]:
        """Deterministic drifts of ``(X1, X2)``."""
        return _drift(self.gap, kappa, self.delta, self.a1, self.a2)

    def step(
        self,
        kappa: float,
        dt: float,
        rng: np.random.Generator,
        tol: Tolerances = DEFAULT_TOLERANCES,
    ) -> Self:
        return two_sle_step(self, kappa, dt, rng, tol)


def _drift(gap, kappa, delta, a1, a2):
    d1 = -(kappa * a1 * delta + 2 * a2) / gap
    d2 = (kappa * a2 * delta + 2 * a1) / gap
    return d1, d2


def two_sle_step(
    s: TwoSleState,
    kappa: float,
    dt: float,
    rng: np.random.Generator,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> TwoSleState:
    """One Euler-Maruyama step, with ``dt`` capped at ``1e-4 (X2 − X1)²``.

    A collided state is returned unchanged.

    """
    if s.collided:
        return s
    h = min(dt, _GAP_CAP * s.gap**2)
    d1, d2 = s.drift(kappa)
    n1, n2 = rng.standard_normal(2)
    x1 = s.x1 + d1 * h + math.sqrt(kappa * s.a1 * h) * n1
    x2 = s.x2 + d2 * h + math.sqrt(kappa * s.a2 * h) * n2
    collided = x2 - x1 < tol.eps_collide
    if collided:
        logger.debug("driven points collided at t=%.6g", s.t + h)
    return dataclasses.replace(s, x1=x1, x2=x2, t=s.t + h, collided=collided)


def two_sle_run(
    x1: float,
    x2: float,
    kappa: float,
    delta: float,
    T: float,
    dt: float,
    runs: int,
    seed: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
    block: int = 4096,
) -> np.ndarray:
    """Collision times of ``runs`` independent two-SLE systems.

    Run ``i`` draws only from ``substream(seed, i)``, so its result does
    not depend on how many runs are simulated together.

    Returns:
        Collision times, ``inf`` for runs still apart at time ``T``.

    """
    if not x1 < x2:
        raise ValueError("x1 must be smaller than x2")
    streams = [substream(seed, i) for i in range(runs)]
    left = np.full(runs, float(x1))
    right = np.full(runs, float(x2))
    t = np.zeros(runs)
    hit = np.full(runs, np.inf)
    active = np.ones(runs, dtype=bool)
    noise = np.empty((runs, block, 2))
    cursor = block
    a = 0.5

    while active.any():
        idx = np.flatnonzero(active)
        if cursor == block:
            for i in idx:
                noise[i] = streams[i].standard_normal((block, 2))
            cursor = 0
        gap = right[idx] - left[idx]
        h = np.minimum(np.minimum(dt, _GAP_CAP * gap**2), T - t[idx])
        d1, d2 = _drift(gap, kappa, delta, a, a)
        sigma = np.sqrt(kappa * a * h)
        left[idx] += d1 * h + sigma * noise[idx, cursor, 0]
        right[idx] += d2 * h + sigma * noise[idx, cursor, 1]
        t[idx] += h
        cursor += 1

        done = right[idx] - left[idx] < tol.eps_collide
        hit[idx[done]] = t[idx[done]]
        active[idx[done]] = False
        active[idx[t[idx] >= T * (1 - 1e-12)]] = False

    logger.debug(
        "two-SLE farm: %d of %d runs collided before T=%g",
        int(np.isfinite(hit).sum()), runs, T,
    )
    return hit

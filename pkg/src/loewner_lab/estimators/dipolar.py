"""Left-passage classification for dipolar SLE.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
import dataclasses
from typing import Union
from collections.abc import Sequence

import numpy as np

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import (
    DipolarOutcome,
    Geometry,
)
from ..errors import Undecided
from ..loewner import (
    DrivingPath,
    forward_batch,
)
from ..sle import (
    SleParams,
    sample_values,
)
from .farm import run_farm
from .montecarlo import McEstimate

logger = logging.getLogger(__name__)

HORIZON = 25.0
ESCAPE = 8.0


def _boundary_outcome(z: complex) -> Union[DipolarOutcome, None]:
    if z.imag == 0 and z.real < 0:
        return DipolarOutcome.left
    if z.imag == 0 and z.real > 0:
        return DipolarOutcome.right
    return None


def _label(
    h: complex, tau: float, scale: float
) -> Union[DipolarOutcome, None]:
    if math.isfinite(tau):
        return DipolarOutcome.inside
    if h.real > ESCAPE * scale:
        return DipolarOutcome.right
    if h.real < -ESCAPE * scale:
        return DipolarOutcome.left
    return None


def classify_dipolar_outcome(
    d: DrivingPath,
    z: complex,
    horizon: float = HORIZON,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> DipolarOutcome:
    """Whether ``z`` ends up left of the trace, right of it, or inside
    the hull.

    Points of the lower boundary are classified by side. Otherwise the
    forward map is run to ``min(horizon, T)``: a swallowed point is
    inside, and a surviving point is left (right) once
    ``Re(g_T(z) - ξ_T)`` is below ``-8Δ`` (above ``8Δ``).

    Raises:
        Undecided: ``|Re(g_T(z) - ξ_T)| <= 8Δ`` at the horizon.

    """
    if d.geometry is not Geometry.dipolar:
        raise ValueError("classification needs a dipolar driving path")
    z = complex(z)
    outcome = _boundary_outcome(z)
    if outcome is not None:
        return outcome
    until = min(horizon, d.final_time)
    state = forward_batch(
        d.times, d.values[None, :], [z], until, d.geometry, d.scale, tol
    )
    h = complex(state.h[0, 0])
    label = _label(h, float(state.tau[0, 0]), d.scale)
    if label is None:
        raise Undecided(z, h)
    return label


@dataclasses.dataclass(eq=False, frozen=True)
class LeftPassage:
    """Outcome frequencies at one point.

    Args:
        z: The point.
        left: Estimate of the left-passage probability.
        inside: Estimate of the swallowing probability.
        right: Estimate of the right-passage probability.
        undecided: Paths still undecided at the horizon.

    """
    z: complex
    left: McEstimate
    inside: McEstimate
    right: McEstimate
    undecided: int


def left_passage_estimate(
    zs: Sequence[complex],
    kappa: float,
    paths: int,
    seed: int,
    T: float = HORIZON,
    dt: float = 1e-2,
    batch: int = 500,
    threads: Union[int, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list[LeftPassage]:
    """Estimate the three outcome probabilities at each point of ``zs``.

    Paths are sampled and pushed forward in batches spread over
    ``threads`` workers; undecided paths are left out of the counts.

    """
    zs = [complex(z) for z in zs]
    params = SleParams(kappa, T=T, dt=dt, seed=seed,
                       geometry=Geometry.dipolar)
    order = list(DipolarOutcome)
    starts = list(range(0, paths, batch))

    def run(chunk: int, _: np.random.Generator) -> np.ndarray:
        start = starts[chunk]
        count = min(batch, paths - start)
        times, values = sample_values(params, count, start)
        state = forward_batch(
            times, values, zs, T, Geometry.dipolar, params.scale, tol
        )
        counts = np.zeros((len(zs), 4), dtype=np.int64)
        for j, z in enumerate(zs):
            fixed = _boundary_outcome(z)
            for i in range(count):
                label = fixed or _label(
                    complex(state.h[i, j]), float(state.tau[i, j]),
                    params.scale,
                )
                counts[j, 3 if label is None else order.index(label)] += 1
        logger.debug("left passage: %d/%d paths", start + count, paths)
        return counts

    counts = sum(
        run_farm(run, len(starts), seed, threads),
        np.zeros((len(zs), 4), dtype=np.int64),
    )

    out = []
    for j, z in enumerate(zs):
        decided = int(counts[j, :3].sum())
        if counts[j, 3]:
            logger.warning("%d paths undecided at %r", counts[j, 3], z)
        est = {
            o: McEstimate.from_counts(int(counts[j, k]), decided, seed)
            for k, o in enumerate(order)
        }
        out.append(LeftPassage(
            z,
            est[DipolarOutcome.left],
            est[DipolarOutcome.inside],
            est[DipolarOutcome.right],
            int(counts[j, 3]),
        ))
    return out

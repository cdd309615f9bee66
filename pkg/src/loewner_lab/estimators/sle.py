"""Monte Carlo checks of SLE boundary and restriction probabilities.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from typing import Union

import numpy as np

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import Geometry
from ..formulas import cft_data
from ..formulas.restriction import RESTRICTION_KAPPA
from ..loewner import (
    forward_batch,
    trace,
    trace_batch,
)
from ..sle import (
    SleParams,
    sample_chordal,
    sample_values,
)
from .boxcount import trace_dimension
from .farm import run_farm
from .fitting import FitReport
from .montecarlo import McEstimate

logger = logging.getLogger(__name__)


def _batches(paths: int, batch: int) -> list[tuple[int, int]]:
    return [(s, min(batch, paths - s)) for s in range(0, paths, batch)]


def race_real_points(
    gaps: np.ndarray,
    kappa: float,
    rng: np.random.Generator,
    rel_step: float = 1e-3,
    cut: float = 1e-3,
    max_steps: int = 1_000_000,
) -> tuple[np.ndarray, np.ndarray]:
    """Run two real points ``0 < a < b`` right of a Brownian driving
    function until one of them is decided.

    Each step lasts ``rel_step · a²`` capacity units, so the walk is
    scale free. The driving increment is applied first and the points
    then move by the exact constant-driving slit map
    ``h -> sqrt(h² + 4 dt)``. A row is decided once the nearer point is
    swallowed, or ``a / b < cut`` (the nearer point goes first), or
    ``(b - a) / b < cut`` (both go together).

    Args:
        gaps: Initial distances to the driving point, shape ``(paths, 2)``.
        kappa: SLE parameter.
        rng: Source of the driving increments.
        rel_step: Step size relative to ``a²``.
        cut: Ratio at which a row is decided.
        max_steps: Hard cap on the number of steps.

    Returns:
        ``(together, decided)``: boolean arrays of shape ``(paths,)``.

    """
    h = np.array(gaps, dtype=float, copy=True)
    if h.ndim != 2 or h.shape[1] != 2 or not np.all(
        (0 < h[:, 0]) & (h[:, 0] < h[:, 1])
    ):
        raise ValueError("gaps must be rows 0 < a < b")
    rows = h.shape[0]
    together = np.zeros(rows, dtype=bool)
    active = np.ones(rows, dtype=bool)
    for _ in range(max_steps):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        a, b = h[idx, 0], h[idx, 1]
        dt = rel_step * a * a
        jump = np.sqrt(kappa * dt) * rng.standard_normal(idx.size)
        a, b = a - jump, b - jump
        first = a <= 0
        both = b <= 0
        a = np.sqrt(np.where(first, 0.0, a * a) + 4 * dt)
        b = np.sqrt(np.where(both, 0.0, b * b) + 4 * dt)
        merged = ~first & ((b - a) < cut * b)
        alone = (first & ~both) | (~first & (a < cut * b))
        done = both | merged | alone
        together[idx[both | merged]] = True
        active[idx[done]] = False
        h[idx, 0], h[idx, 1] = a, b
    return together, ~active


def hitting_estimate(
    x: float,
    X: float,
    kappa: float,
    paths: int,
    seed: int,
    rel_step: float = 1e-3,
    max_steps: int = 1_000_000,
    batch: int = 1000,
    threads: Union[int, None] = None,
) -> McEstimate:
    """Estimate ``P[chordal SLE_κ does not touch [x, X]]``.

    The curve misses the interval exactly when ``x`` and ``X`` are
    swallowed at the same time. Only the two real points are simulated
    (see :func:`race_real_points`), with no time horizon, so every path
    is decided unless ``max_steps`` runs out.

    """
    if not 0 < x < X:
        raise ValueError("need 0 < x < X")
    if not kappa > 4:
        raise ValueError("real points are swallowed only for kappa > 4")
    chunks = _batches(paths, batch)

    def run(chunk: int, rng: np.random.Generator) -> tuple[int, int]:
        _, count = chunks[chunk]
        gaps = np.tile([x, X], (count, 1))
        together, decided = race_real_points(
            gaps, kappa, rng, rel_step, max_steps=max_steps
        )
        return int((together & decided).sum()), int(decided.sum())

    results = run_farm(run, len(chunks), seed, threads)
    successes = sum(r[0] for r in results)
    trials = sum(r[1] for r in results)
    if trials < paths:
        logger.warning("%d of %d paths undecided after %d steps",
                       paths - trials, paths, max_steps)
    return McEstimate.from_counts(successes, trials, seed)


def trace_meets_disc(
    points: np.ndarray, center: complex, r: float
) -> np.ndarray:
    """Whether each polyline (one per row of ``points``) comes within
    ``r`` of ``center``, segments included.

    """
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    start, end = points[:, :-1], points[:, 1:]
    seg = end - start
    length2 = np.abs(seg) ** 2
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(
            length2 > 0,
            ((center - start) * np.conj(seg)).real / length2,
            0.0,
        )
    nearest = start + np.clip(s, 0.0, 1.0) * seg
    near = np.abs(nearest - center) <= r
    return near.any(axis=1) | (np.abs(points[:, 0] - center) <= r)


def restriction_estimate(
    x: float,
    r: float,
    paths: int,
    seed: int,
    T: float = 9.0,
    dt: float = 5e-3,
    every: int = 1,
    batch: int = 256,
    threads: Union[int, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> McEstimate:
    """Estimate ``P[chordal SLE_{8/3} avoids the semi-disc of radius r
    at x]``.

    The trace is followed up to time ``T`` and checked segment by
    segment against the disc. A path still clear at ``T`` is accepted
    with the probability that the rest of the curve avoids the image
    of the disc under ``g_T``, taken as a semi-disc of radius
    ``g_T'(x) r`` centred at ``g_T(x)``. That acceptance is exact when
    the image is a semi-disc and first order in ``r / (g_T(x) - ξ_T)``
    otherwise.

    """
    if not 0 < r < x:
        raise ValueError("need 0 < r < x")
    params = SleParams(RESTRICTION_KAPPA, T=T, dt=dt, seed=seed)
    exponent = cft_data(RESTRICTION_KAPPA).h12
    chunks = _batches(paths, batch)

    def run(chunk: int, rng: np.random.Generator) -> int:
        start, count = chunks[chunk]
        times, values = sample_values(params, count, start)
        points = trace_batch(times, values, every, tol)
        clear = ~trace_meets_disc(points, x, r)
        state = forward_batch(times, values, [x], T, tol=tol,
                              with_derivative=True)
        gap = state.h[:, 0].real
        radius = np.abs(state.deriv[:, 0]) * r
        with np.errstate(invalid="ignore", divide="ignore"):
            inside = gap > radius
            weight = np.where(
                inside, np.clip(1 - (radius / gap) ** 2, 0.0, 1.0), 0.0
            ) ** exponent
        accepted = clear & (rng.random(count) < weight)
        return int(accepted.sum())

    avoided = sum(run_farm(run, len(chunks), seed, threads))
    return McEstimate.from_counts(avoided, paths, seed)


def sle_trace_dimension(
    kappa: float,
    paths: int,
    seed: int,
    T: float = 1.0,
    dt: float = 1e-4,
    epsilons: Union[np.ndarray, None] = None,
    threads: Union[int, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> FitReport:
    """Box-counting exponent of chordal SLE_κ traces (prediction
    ``1 + κ/8``).

    """
    if epsilons is None:
        eps_min = 2 * np.sqrt(max(kappa, 1.0) * dt)
        epsilons = np.geomspace(eps_min, 12 * eps_min, 8)
    params = SleParams(kappa, T=T, dt=dt, seed=seed,
                       geometry=Geometry.chordal)

    def run(i: int, _: np.random.Generator) -> np.ndarray:
        return trace(sample_chordal(params.with_index(i)), tol).points

    traces = run_farm(run, paths, seed, threads)
    return trace_dimension(traces, epsilons)

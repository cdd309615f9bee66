"""Scaling fits and crossing estimates for the lattice models.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from typing import Union
from collections.abc import Sequence

import numpy as np

from ..enums import (
    NavigatorVariant,
    SizeProxy,
)
from ..lattice import (
    HexDomain,
    lerw_halfplane,
    lerw_reflecting,
    navigator_interface,
    percolation_interface,
    triangle_crossing,
)
from .farm import run_farm
from .fitting import (
    FitReport,
    fit_dimension,
)
from .montecarlo import (
    McEstimate,
    mc_probability,
)

logger = logging.getLogger(__name__)


def triangle_crossing_estimate(
    side: int,
    x: float,
    samples: int,
    seed: int,
    threads: Union[int, None] = None,
) -> McEstimate:
    """Estimate the triangle crossing probability (limit ``x``)."""
    return mc_probability(
        lambda _, rng: triangle_crossing(side, x, rng), samples, seed, threads
    )


def interface_fit(
    sizes: Sequence[int],
    samples: int,
    seed: int,
    variant: Union[NavigatorVariant, None] = None,
    threads: Union[int, None] = None,
) -> FitReport:
    """Fit ``S ∝ L^δ`` for interfaces crossing ``L x L`` strips.

    ``variant=None`` grows percolation interfaces, otherwise the given
    navigator.

    """
    pairs: list[tuple[float, float]] = []
    for size in sizes:
        domain = HexDomain.strip(size, size)

        def run(_: int, rng: np.random.Generator) -> int:
            if variant is None:
                return percolation_interface(domain, rng).length
            return navigator_interface(domain, rng, variant).length

        lengths = run_farm(run, samples, seed + size, threads)
        pairs.extend((size, n) for n in lengths)
        logger.debug("size %d: mean length %.1f", size, np.mean(lengths))
    return fit_dimension(pairs)


def lerw_fit(
    scales: Sequence[int],
    samples: int,
    seed: int,
    proxy: SizeProxy = SizeProxy.max_altitude,
    reflecting: bool = False,
    threads: Union[int, None] = None,
) -> FitReport:
    """Fit the loop-erased walk length against its size.

    By default walks are conditioned to avoid the axis and stopped at
    altitude ``n`` for each ``n`` in ``scales``; with ``reflecting`` the
    reflecting walk is run to ``n`` erased steps and ``S`` is fitted
    against the mean size instead (``S ∝ L^δ`` as ``L ∝ S^{1/δ}``).

    """
    proxy = SizeProxy(proxy)
    if not reflecting:
        pairs: list[tuple[float, float]] = []
        for n in scales:
            walks = run_farm(
                lambda _, rng: lerw_halfplane(n, rng), samples, seed + n,
                threads,
            )
            pairs.extend((w.size(proxy), w.length) for w in walks)
        if proxy is SizeProxy.max_altitude:
            return fit_dimension(pairs)
        return _fit_by_mean_size(pairs, scales, samples)

    pairs = []
    for n in scales:
        walks = run_farm(
            lambda _, rng: lerw_reflecting(n, rng), samples, seed + n,
            threads,
        )
        pairs.extend((w.size(proxy), w.length) for w in walks)
    return _fit_by_mean_size(pairs, scales, samples)


def _fit_by_mean_size(
    pairs: list[tuple[float, float]], scales: Sequence[int], samples: int
) -> FitReport:
    """Group consecutive blocks of ``samples`` pairs and fit mean length
    against mean size.

    """
    grouped = []
    for k in range(len(scales)):
        block = np.array(pairs[k * samples:(k + 1) * samples])
        grouped.append((block[:, 0].mean(), block[:, 1].mean()))
    return fit_dimension(grouped)

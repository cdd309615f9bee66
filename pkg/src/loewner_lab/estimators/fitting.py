"""Log-log fits of scaling exponents.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from typing import Annotated
from collections import defaultdict
from collections.abc import (
    Iterable,
    Mapping,
)

import numpy as np
from scipy.stats import linregress

from .._internals import _Record
from ..errors import DegenerateFit

logger = logging.getLogger(__name__)


class FitReport(_Record):
    """Result of a least-squares fit of ``log S = δ log L + c``.

    Args:
        exponent: The slope δ.
        stderr: Standard error of the slope.
        r_squared: Coefficient of determination.
        intercept: The intercept ``c``.
        points: ``(log L, log mean S)`` pairs the fit used.
        spreads: Standard error of each ``log mean S``; zero for sizes
            with a single statistic.
        weighted: Whether the points were weighted by ``1 / spread``.

    """
    exponent: Annotated[float, "exponent"]
    stderr: Annotated[float, "stderr"]
    r_squared: Annotated[float, "r_squared"]
    intercept: Annotated[float, "intercept"]
    points: Annotated[tuple[tuple[float, float], ...], "points"]
    spreads: Annotated[tuple[float, ...], "spreads"] = ()
    weighted: Annotated[bool, "weighted"] = False

    def __post_init__(self) -> None:
        if self.stderr < 0:
            raise ValueError("stderr must be non-negative")
        if len(self.points) < 3:
            raise ValueError("a fit needs at least three points")
        if self.spreads and len(self.spreads) != len(self.points):
            raise ValueError("need one spread per point")
        if any(s < 0 for s in self.spreads):
            raise ValueError("spreads must be non-negative")


def _log_spread(stats: list[float]) -> float:
    # delta method: se(log m) = se(m) / m
    if len(stats) < 2:
        return 0.0
    return float(
        np.std(stats, ddof=1) / np.sqrt(len(stats)) / np.mean(stats)
    )


def _weighted_line(
    x: np.ndarray, y: np.ndarray, spreads: np.ndarray
) -> tuple[float, float, float, float]:
    w = 1 / spreads
    (slope, intercept), cov = np.polyfit(x, y, 1, w=w, cov="unscaled")
    w2 = w * w
    resid = y - (slope * x + intercept)
    centred = y - np.sum(w2 * y) / np.sum(w2)
    total = np.sum(w2 * centred ** 2)
    r_squared = 1 - np.sum(w2 * resid ** 2) / total if total > 0 else 1.0
    return (float(slope), float(intercept), float(np.sqrt(cov[0, 0])),
            float(r_squared))


def fit_dimension(
    samples: Iterable[tuple[float, float]], weighted: bool = False
) -> FitReport:
    """Fit the exponent of ``mean S ∝ L^δ``.

    Samples are ``(size, statistic)`` pairs; statistics are averaged per
    size before taking logarithms. The standard error of each log mean
    is reported, and with ``weighted`` the points are weighted by its
    inverse (an ordinary fit is used when some size has no spread).

    Raises:
        DegenerateFit: Fewer than three distinct sizes, or a non-positive
            size or mean.

    """
    groups: dict[float, list[float]] = defaultdict(list)
    for size, stat in samples:
        groups[float(size)].append(float(stat))
    if len(groups) < 3:
        raise DegenerateFit(
            f"need at least three distinct sizes, got {len(groups)}"
        )
    sizes = np.array(sorted(groups))
    means = np.array([np.mean(groups[s]) for s in sizes])
    if np.any(sizes <= 0) or np.any(means <= 0):
        raise DegenerateFit("sizes and means must be positive")
    spreads = np.array([_log_spread(groups[s]) for s in sizes])

    x, y = np.log(sizes), np.log(means)
    if weighted and not np.all(spreads > 0):
        logger.debug("fit: some sizes have no spread, not weighting")
        weighted = False
    if weighted:
        slope, intercept, stderr, r_squared = _weighted_line(x, y, spreads)
    else:
        fit = linregress(x, y)
        slope, intercept = float(fit.slope), float(fit.intercept)
        stderr = float(fit.stderr)
        r_squared = float(fit.rvalue) ** 2
    if not np.isfinite(stderr):
        stderr = 0.0
    logger.debug("fit: slope %.5f +/- %.2g", slope, stderr)
    return FitReport(
        exponent=slope,
        stderr=abs(stderr),
        r_squared=r_squared,
        intercept=intercept,
        points=tuple(zip(x.tolist(), y.tolist())),
        spreads=tuple(spreads.tolist()),
        weighted=weighted,
    )


def fit_from_groups(
    groups: Mapping[float, Iterable[float]], weighted: bool = False
) -> FitReport:
    """`fit_dimension` on ``{size: statistics}``."""
    return fit_dimension(
        ((size, stat) for size, stats in groups.items() for stat in stats),
        weighted,
    )

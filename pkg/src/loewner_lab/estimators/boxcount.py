"""Box-counting dimension of point sets and traces.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


from collections.abc import Sequence

import numpy as np

from ..errors import DegenerateFit
from .fitting import (
    FitReport,
    fit_dimension,
)


def _scales(epsilons: Sequence[float]) -> np.ndarray:
    eps = np.unique(np.asarray(epsilons, dtype=float))
    if eps.size < 3:
        raise DegenerateFit("box counting needs at least three scales")
    if np.any(eps <= 0):
        raise DegenerateFit("scales must be positive")
    if eps[-1] / eps[0] < 10:
        raise DegenerateFit("scales must span at least one decade")
    return eps


def densify(points: np.ndarray, step: float) -> np.ndarray:
    """Insert points along each segment so none is longer than ``step``."""
    z = np.asarray(points, dtype=complex).ravel()
    if z.size < 2:
        return z
    seg = np.diff(z)
    k = np.maximum(np.ceil(np.abs(seg) / step).astype(np.int64), 1)
    offset = np.arange(k.sum()) - np.repeat(np.cumsum(k) - k, k)
    frac = offset / np.repeat(k, k)
    return np.append(np.repeat(z[:-1], k) + frac * np.repeat(seg, k), z[-1])


def box_count(
    points: Sequence[complex],
    epsilons: Sequence[float],
    polyline: bool = False,
) -> np.ndarray:
    """Number of ``ε``-grid boxes hit by the points, for each ``ε``.

    With ``polyline`` the points are joined by segments first.

    """
    z = np.asarray(points, dtype=complex).ravel()
    z = z[np.isfinite(z)]
    eps = np.asarray(epsilons, dtype=float)
    counts = np.empty(eps.size, dtype=np.int64)
    for k, e in enumerate(eps):
        if polyline:
            z_e = densify(z, e / 2)
        else:
            z_e = z
        cells = np.column_stack(
            [np.floor(z_e.real / e), np.floor(z_e.imag / e)]
        ).astype(np.int64)
        counts[k] = np.unique(cells, axis=0).shape[0]
    return counts


def trace_dimension(
    traces: Sequence[Sequence[complex]], epsilons: Sequence[float]
) -> FitReport:
    """Fit ``N_ε ∝ ε^{-d}`` over the traces' box counts.

    Raises:
        DegenerateFit: Fewer than three scales, or less than a decade.

    """
    eps = _scales(epsilons)
    samples = []
    for points in traces:
        counts = box_count(points, eps, polyline=True)
        samples.extend(zip((1 / eps).tolist(), counts.tolist()))
    return fit_dimension(samples)

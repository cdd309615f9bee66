"""Driving-function samplers.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import dataclasses

import numpy as np

from .._internals import _Unset
from ..enums import Geometry
from ..loewner import (
    DrivingPath,
    time_grid,
)
from ..rng import substream
from .params import SleParams


def _brownian(p: SleParams) -> tuple[np.ndarray, np.ndarray]:
    """Grid and ``sqrt(κ) B`` sampled on it from stream (seed, index)."""
    times = time_grid(p.T, p.dt)
    rng = substream(p.seed, p.index)
    normals = rng.standard_normal(times.size - 1)
    steps = np.sqrt(p.kappa * np.diff(times)) * normals
    return times, np.concatenate(([0.0], np.cumsum(steps)))


def sample_chordal(p: SleParams) -> DrivingPath:
    """``ξ_t = sqrt(κ) B_t`` for chordal SLE."""
    times, values = _brownian(p)
    return DrivingPath(times, values, Geometry.chordal)


def sample_radial(p: SleParams) -> DrivingPath:
    """Brownian driving for radial SLE on the half-cylinder."""
    times, values = _brownian(p)
    scale = p.scale if p.geometry is Geometry.radial else _Unset
    return DrivingPath(times, values, Geometry.radial, scale)


def sample_dipolar(p: SleParams) -> DrivingPath:
    """Brownian driving for dipolar SLE in the strip."""
    times, values = _brownian(p)
    scale = p.scale if p.geometry is Geometry.dipolar else _Unset
    return DrivingPath(times, values, Geometry.dipolar, scale)


def sample_sle_kr(p: SleParams) -> DrivingPath:
    """``U_t = sqrt(κ) B_t + α t`` with ``α = ρ − (κ − 6)/2``, strip form.

    With ``ρ = (κ − 6)/2`` this is exactly `sample_dipolar` for the same
    seed.

    """
    if p.rho is _Unset:
        raise ValueError("SLE(kappa, rho) needs rho")
    times, values = _brownian(p)
    scale = p.scale if p.geometry is Geometry.dipolar else _Unset
    return DrivingPath(
        times, values + p.drift * times, Geometry.dipolar, scale
    )


SAMPLERS = {
    Geometry.chordal: sample_chordal,
    Geometry.radial: sample_radial,
    Geometry.dipolar: sample_dipolar,
}


def sample(p: SleParams) -> DrivingPath:
    """Dispatch on ``p.geometry`` (and on ``p.rho`` for dipolar)."""
    if p.geometry is Geometry.dipolar and p.rho is not _Unset:
        return sample_sle_kr(p)
    return SAMPLERS[p.geometry](p)


def sample_values(
    p: SleParams, count: int, start: int = 0
) -> tuple[np.ndarray, np.ndarray]:
    """Driving values of samples ``start .. start + count - 1``.

    Returns:
        The common grid and an array of shape ``(count, len(grid))``.
        Row ``i`` equals ``sample(p.with_index(start + i)).values``.

    """
    rows = [
        sample(dataclasses.replace(p, index=start + i)).values
        for i in range(count)
    ]
    return time_grid(p.T, p.dt), np.vstack(rows)

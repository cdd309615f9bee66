"""Trace reconstruction, forward maps and conformal radii.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
import dataclasses
from typing import Union
from collections.abc import Sequence

import numpy as np

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import Geometry
from ..errors import Swallowed
from .driving import (
    DrivingPath,
    SwallowResult,
    TraceSample,
)
from .steps import (
    flow,
    slit_forward,
    slit_inverse,
    vector_field,
)

logger = logging.getLogger(__name__)


def trace(
    d: DrivingPath, tol: Tolerances = DEFAULT_TOLERANCES
) -> TraceSample:
    """Build the trace ``γ(t_k) = f_1 ∘ ... ∘ f_k(ξ(t_k) + iε)``.

    Each ``f_j`` inverts the evolution over interval ``j``. The cost is
    quadratic in the number of grid points.

    Raises:
        StepFailure: A radial or dipolar step failed to converge.

    """
    values = d.values
    n = values.size - 1
    work = np.empty(n + 1, dtype=complex)
    work[0] = values[0]
    chordal = d.geometry is Geometry.chordal
    field = None if chordal else vector_field(d.geometry, d.scale)

    for j in range(n, 0, -1):
        dt = float(d.times[j] - d.times[j - 1])
        c = float(values[j])
        work[j] = c + 1j * tol.eps_lift
        h = work[j:] - c
        if chordal:
            h = slit_inverse(h, dt)
        else:
            h, _ = flow(field, h, dt, reverse=True, tol=tol)
        work[j:] = c + h

    if d.geometry is not Geometry.radial:
        work.imag = np.maximum(work.imag, 0.0)
    logger.debug("built %s trace with %d points", d.geometry, n + 1)
    return TraceSample(work, d.times.copy(), d.geometry)


@dataclasses.dataclass(eq=False, frozen=True)
class ForwardState:
    """Images of a batch of points under a batch of forward maps.

    Args:
        h: ``g_T(z) - ξ_T`` with shape ``(paths, points)``; ``nan`` where
            swallowed.
        tau: Swallowing times, ``nan`` where alive.
        xi: Driving value ``ξ_T`` for each path.
        derivative: ``h_T'(z)`` (chordal only, otherwise ``None``).

    """
    h: np.ndarray
    tau: np.ndarray
    xi: np.ndarray
    derivative: Union[np.ndarray, None] = None

    @property
    def value(self) -> np.ndarray:
        return self.h + self.xi[:, None]


def forward_batch(
    times: np.ndarray,
    values: np.ndarray,
    z: Sequence[complex],
    until: float,
    geometry: Geometry = Geometry.chordal,
    scale: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
    with_derivative: bool = False,
) -> ForwardState:
    """Run the forward maps of several paths sharing one time grid.

    Args:
        times: The common grid.
        values: Driving values with shape ``(paths, len(times))``.
        z: Points to follow.
        until: Final capacity time.
        geometry: Reference domain.
        scale: Λ or Δ for radial and dipolar geometries.
        tol: Tolerances.
        with_derivative: Accumulate ``h'`` by the chain rule (chordal).

    """
    values = np.atleast_2d(np.asarray(values, dtype=float))
    z = np.asarray(z, dtype=complex).ravel()
    paths = values.shape[0]
    chordal = geometry is Geometry.chordal
    field = None if chordal else vector_field(geometry, scale)
    boundary = np.broadcast_to(z.imag == 0, (paths, z.size))

    h = np.broadcast_to(z - values[:, :1], (paths, z.size)).copy()
    tau = np.full(h.shape, np.nan)
    deriv = np.ones(h.shape, dtype=complex) if with_derivative else None
    previous = values[:, 0].copy()
    current = previous

    for k in range(1, times.size):
        start = float(times[k - 1])
        if start >= until:
            break
        dt = min(float(times[k]), until) - start
        current = values[:, k]

        shifted = h + (previous - current)[:, None]
        jumped = boundary & np.isfinite(h) & (
            np.sign(h.real) != np.sign(shifted.real)
        )
        if jumped.any():
            tau[jumped] = start
            shifted[jumped] = np.nan
        h = shifted
        previous = current

        alive = np.isfinite(h)
        if not alive.any():
            break
        if chordal:
            stepped, sub = slit_forward(h[alive], dt, tol.eps_swallow)
            if deriv is not None:
                deriv[alive] *= h[alive] / stepped
        else:
            stepped, sub = flow(field, h[alive], dt, tol=tol)
        h[alive] = stepped
        tau_alive = tau[alive]
        newly = np.isfinite(sub)
        tau_alive[newly] = start + sub[newly]
        tau[alive] = tau_alive

    return ForwardState(h, tau, np.asarray(current, dtype=float), deriv)


def forward_map(
    d: DrivingPath,
    z: complex,
    T: Union[float, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SwallowResult:
    """``g_T(z)`` or the swallowing time of ``z``.

    Chordal evolutions use exact per-interval steps; radial and dipolar
    ones use the adaptive integrator with blow-up detection near ``ξ``.

    Raises:
        StepFailure: A radial or dipolar step failed to converge.

    """
    T = d.final_time if T is None else T
    state = forward_batch(
        d.times, d.values[None, :], [z], T, d.geometry, d.scale, tol
    )
    tau = float(state.tau[0, 0])
    if np.isfinite(tau):
        return SwallowResult(complex("nan"), tau)
    return SwallowResult(complex(state.value[0, 0]))


def conformal_radius(
    d: DrivingPath,
    z0: complex,
    T: Union[float, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Conformal radius ``|2 Im h_T(z0) / h_T'(z0)|`` of the hull from z0.

    Raises:
        Swallowed: ``z0`` was swallowed by time ``T``.

    """
    if d.geometry is not Geometry.chordal:
        raise ValueError("conformal radius is implemented for chordal paths")
    if z0.imag <= 0:
        raise ValueError("z0 must lie in the open upper half plane")
    T = d.final_time if T is None else T
    state = forward_batch(
        d.times, d.values[None, :], [z0], T, tol=tol, with_derivative=True
    )
    tau = float(state.tau[0, 0])
    if np.isfinite(tau):
        raise Swallowed(z0, tau)
    h = complex(state.h[0, 0])
    return abs(2 * h.imag / complex(state.derivative[0, 0]))


def swallowing_times(
    d: DrivingPath,
    xs: Sequence[float],
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Swallowing times of real boundary points (``inf`` if never)."""
    state = forward_batch(
        d.times, d.values[None, :], np.asarray(xs, dtype=float),
        d.final_time, d.geometry, d.scale, tol,
    )
    return np.where(np.isfinite(state.tau[0]), state.tau[0], np.inf)


def trace_batch(
    times: np.ndarray,
    values: np.ndarray,
    every: int = 1,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Chordal traces of several paths at every ``every``-th grid time.

    Same zipper as `trace`, run on an array of shape
    ``(paths, len(times[::every]))``.

    """
    values = np.atleast_2d(np.asarray(values, dtype=float))
    if every < 1:
        raise ValueError("every must be positive")
    n = values.shape[1] - 1
    marks = np.arange(0, n + 1, every)
    work = np.empty((values.shape[0], marks.size), dtype=complex)
    work[:, 0] = values[:, 0]
    first = marks.size

    for j in range(n, 0, -1):
        c = values[:, j][:, None]
        if first > 1 and marks[first - 1] == j:
            first -= 1
            work[:, first] = values[:, j] + 1j * tol.eps_lift
        if first == marks.size:
            continue
        dt = float(times[j] - times[j - 1])
        work[:, first:] = c + slit_inverse(work[:, first:] - c, dt)

    work.imag = np.maximum(work.imag, 0.0)
    return work

"""Elementary Loewner steps under a constant driving value.

Chordal steps are exact slit maps. Radial and dipolar steps integrate
their vector fields with an embedded Runge-Kutta 4(5) scheme. All kernels
work on ``h = g - ξ`` so that a constant driving value drops out of the
flow.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from collections.abc import Callable

import numpy as np
from scipy.integrate import solve_ivp

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import Geometry
from ..errors import StepFailure
from .driving import SwallowResult

logger = logging.getLogger(__name__)

VectorField = Callable[[np.ndarray], np.ndarray]


def sqrt_upper(u: np.ndarray, ref: np.ndarray) -> np.ndarray:
    """Square root in the closed upper half plane.

    Real roots take the sign of ``Re ref``.

    """
    s = np.sqrt(np.asarray(u, dtype=complex))
    ref = np.asarray(ref, dtype=complex)
    flip = (s.imag < 0) | ((s.imag == 0) & (s.real * ref.real < 0))
    return np.where(flip, -s, s)


def slit_inverse(h: np.ndarray, dt: float) -> np.ndarray:
    """``sqrt(h² - 4dt)`` on the upper branch (vectorised)."""
    return sqrt_upper(np.square(h) - 4 * dt, h)


def slit_forward(
    h: np.ndarray, dt: float, eps_swallow: float
) -> tuple[np.ndarray, np.ndarray]:
    """Forward slit step on ``h = z - ξ``.

    Returns:
        The stepped values and the sub-step swallowing times (``nan``
        where the point survives). Swallowed entries are ``nan``.

    """
    u0 = np.square(np.asarray(h, dtype=complex))
    s_min = np.clip(-u0.real / 4, 0.0, dt)
    swallowed = np.abs(u0 + 4 * s_min) < eps_swallow
    out = sqrt_upper(u0 + 4 * dt, h)
    out = np.where(swallowed, np.nan, out)
    tau = np.where(swallowed, s_min, np.nan)
    return out, tau


def chordal_slit_step(w: complex, xi: float, dt: float) -> complex:
    """Inverse chordal step ``ξ + sqrt((w - ξ)² - 4dt)``.

    Args:
        w: A point of the closed upper half plane.
        xi: The constant driving value.
        dt: Capacity increment.

    Returns:
        complex: The preimage, in the closed upper half plane.

    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    return complex(xi + slit_inverse(np.asarray(w - xi), dt))


def chordal_forward_step(
    z: complex,
    xi: float,
    dt: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> SwallowResult:
    """Forward chordal step ``ξ + sqrt((z - ξ)² + 4dt)``.

    The point is swallowed when ``|(g - ξ)²|`` falls below
    ``tol.eps_swallow`` during the step; the sub-step time is reported.

    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if z.imag < 0:
        raise ValueError("z must lie in the closed upper half plane")
    out, tau = slit_forward(np.asarray(z - xi), dt, tol.eps_swallow)
    if np.isnan(tau):
        return SwallowResult(complex(xi + out))
    return SwallowResult(complex("nan"), float(tau))


def radial_field(scale: float) -> VectorField:
    """``(2/Λ) cot(h/Λ)``: chordal flow on a half-cylinder."""
    def field(h: np.ndarray) -> np.ndarray:
        return (2 / scale) / np.tan(h / scale)
    return field


def dipolar_field(scale: float) -> VectorField:
    """``Δ⁻¹ coth(h/2Δ)``: flow in the strip of width Δπ."""
    def field(h: np.ndarray) -> np.ndarray:
        return (1 / scale) / np.tanh(h / (2 * scale))
    return field


def vector_field(geometry: Geometry, scale: float) -> VectorField:
    if geometry is Geometry.radial:
        return radial_field(scale)
    if geometry is Geometry.dipolar:
        return dipolar_field(scale)
    raise ValueError(f"no vector field for {geometry} geometry")


def flow(
    field: VectorField,
    h0: np.ndarray,
    duration: float,
    reverse: bool = False,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrate ``dh/ds = ±field(h)`` over ``[0, duration]``.

    In the forward direction a point is removed once
    ``|h|² < 10·eps_swallow``; its swallowing time is recorded and its
    value set to ``nan``.

    Returns:
        The values at ``duration`` and the swallowing times (``nan``
        for surviving points).

    Raises:
        StepFailure: The integrator could not meet its tolerance.

    """
    h = np.array(h0, dtype=complex, ndmin=1)
    tau = np.full(h.shape, np.nan)
    active = np.isfinite(h)
    sign = -1.0 if reverse else 1.0
    threshold = 10 * tol.eps_swallow
    s = 0.0

    def rhs(_: float, y: np.ndarray) -> np.ndarray:
        return sign * field(y)

    def near(_: float, y: np.ndarray) -> float:
        return float(np.min(np.abs(y) ** 2) - threshold)

    near.terminal = True
    near.direction = -1

    while s < duration and active.any():
        idx = np.flatnonzero(active)

        if not reverse:
            close = np.abs(h[idx]) ** 2 <= threshold
            if close.any():
                tau[idx[close]] = s
                h[idx[close]] = np.nan
                active[idx[close]] = False
                continue

        sol = solve_ivp(
            rhs,
            (s, duration),
            h[idx],
            method="RK45",
            rtol=tol.rtol,
            atol=tol.atol,
            events=None if reverse else near,
        )
        if sol.status == -1:
            raise StepFailure(s, sol.message)

        if sol.status == 1:
            s_event = float(sol.t_events[0][0])
            y_event = sol.y_events[0][0]
            hit = idx[int(np.argmin(np.abs(y_event)))]
            logger.debug("point %d swallowed at sub-step %.3g", hit, s_event)
            h[idx] = y_event
            tau[hit] = s_event
            h[hit] = np.nan
            active[hit] = False
            s = s_event
        else:
            h[idx] = sol.y[:, -1]
            s = duration

    return h, tau

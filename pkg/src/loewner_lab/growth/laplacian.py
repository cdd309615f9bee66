"""Polynomial Laplacian growth.

A growing droplet is described by the exterior map
``f(w) = f_0 w + f_1 + f_2 w^-1 + ... + f_N w^(1-N)`` with ``f_0 = R > 0``.
The boundary moves with normal velocity ``|f'|^-1`` on the unit circle,
i.e. ``Re[∂_t f · conj(w f')] = 1``, so the area grows as ``2πt`` and the
number of coefficients is preserved.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import math
import logging
from typing import (
    Annotated,
    Any,
)
from collections.abc import Mapping
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

import numpy as np
from scipy.integrate import solve_ivp

from .._internals import _Record
from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..errors import (
    CuspReached,
    StepFailure,
)

logger = logging.getLogger(__name__)

MIN_NODES = 256


def _coeffs(value: Any) -> np.ndarray:
    coeffs = np.array(value, dtype=complex).ravel()
    coeffs.setflags(write=False)
    return coeffs


class LgPolyState(_Record):
    """Coefficients ``f_0 .. f_N`` of the exterior map at time ``t``.

    Args:
        coeffs: Complex coefficients; ``f_0`` must be real and positive.
        t: Time.

    """
    coeffs: Annotated[np.ndarray, "coeffs"]
    t: Annotated[float, "t"] = 0.0

    def __post_init__(self) -> None:
        coeffs = _coeffs(self.coeffs)
        if coeffs.size == 0:
            raise ValueError("coeffs must hold at least f_0")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coeffs must be finite")
        if coeffs[0].imag != 0 or not coeffs[0].real > 0:
            raise ValueError("f_0 must be real and positive")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "t", float(self.t))

    @property
    def R(self) -> float:
        return float(self.coeffs[0].real)

    @property
    def N(self) -> int:
        return self.coeffs.size - 1

    @property
    def beta(self) -> float:
        """``(N-1) f_N / R`` for a Z_N symmetric state."""
        if self.N < 2:
            return 0.0
        return float(abs(self.coeffs[-1]) * (self.N - 1) / self.R)

    def at(self, w: Any) -> np.ndarray:
        """Evaluate ``f(w)``."""
        w = np.asarray(w, dtype=complex)
        powers = 1 - np.arange(self.N + 1)
        return np.sum(self.coeffs * w[..., None] ** powers, axis=-1)

    def derivative(self, w: Any) -> np.ndarray:
        """Evaluate ``f'(w)``."""
        w = np.asarray(w, dtype=complex)
        powers = 1 - np.arange(self.N + 1)
        return np.sum(
            powers * self.coeffs * w[..., None] ** (powers - 1), axis=-1
        )

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Self:
        """Inverse of `serialize`."""
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        return cls(coeffs, data.get("t", 0.0))


def lg_zn_state(n: int, R: float, beta: float, t: float = 0.0) -> LgPolyState:
    """The Z_n symmetric state ``f(w) = R[w + β w^(1-n) / (n-1)]``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 <= beta < 1:
        raise ValueError("beta must lie in [0, 1)")
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = R
    coeffs[n] = R * beta / (n - 1)
    return LgPolyState(coeffs, t)


def lg_area(s: LgPolyState) -> float:
    """``π[R² + Σ (1-n)|f_n|²]``."""
    n = np.arange(s.N + 1)
    return float(math.pi * np.sum((1 - n) * np.abs(s.coeffs) ** 2))


def lg_zn_time_of_radius(n: int, R: float, R_c: float) -> float:
    """Time at which the Z_n droplet grown from a point has radius ``R``.

    ``t(R) = R²(1 - β²/(n-1))/2`` with ``β = (R/R_c)^(n-2)``.

    """
    beta = (R / R_c) ** (n - 2)
    return R * R * (1 - beta * beta / (n - 1)) / 2


def lg_zn_cusp_time(n: int, R_c: float) -> float:
    """Time at which the Z_n droplet reaches its cusp (β = 1)."""
    return R_c * R_c * (n - 2) / (2 * (n - 1))


def lg_zn_evolve(
    n: int,
    R_c: float,
    t: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[float, float]:
    """Integrate ``∂_t R² = 2/(1 - β²)`` with ``β = (R/R_c)^(n-2)``
    from a point-like droplet.

    Returns:
        ``(R_t, β_t)``.

    Raises:
        CuspReached: β reached ``1 - eps_cusp`` before ``t``.
        StepFailure: The integrator failed.

    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if R_c <= 0:
        raise ValueError("R_c must be positive")
    if t < 0:
        raise ValueError("t must be non-negative")

    limit = 1 - tol.eps_cusp
    scale = R_c * R_c

    def beta_of(u: float) -> float:
        return max(u / scale, 0.0) ** ((n - 2) / 2)

    def rhs(_: float, y: np.ndarray) -> np.ndarray:
        b = beta_of(y[0])
        return np.array([2 / (1 - min(b * b, limit * limit))])

    def cusp(_: float, y: np.ndarray) -> float:
        return beta_of(y[0]) - limit

    cusp.terminal = True
    cusp.direction = 1

    if t == 0:
        return 0.0, 0.0

    sol = solve_ivp(
        rhs, (0.0, t), [0.0], method="RK45",
        rtol=tol.rtol, atol=tol.atol, events=cusp,
    )
    if sol.status == -1:
        raise StepFailure(float(sol.t[-1]), sol.message)
    if sol.status == 1:
        t_cusp = float(sol.t_events[0][0])
        raise CuspReached(t_cusp, beta_of(float(sol.y_events[0][0][0])))

    u = float(sol.y[0, -1])
    return math.sqrt(u), beta_of(u)


def _pack(coeffs: np.ndarray) -> np.ndarray:
    rest = np.column_stack([coeffs[1:].real, coeffs[1:].imag]).ravel()
    return np.concatenate([[coeffs[0].real], rest])


def _unpack(y: np.ndarray) -> np.ndarray:
    coeffs = np.empty((y.size + 1) // 2, dtype=complex)
    coeffs[0] = y[0]
    pairs = np.asarray(y[1:], dtype=float).reshape(-1, 2)
    coeffs[1:] = pairs[:, 0] + 1j * pairs[:, 1]
    return coeffs


def _residual(f: np.ndarray, df: np.ndarray) -> np.ndarray:
    """Left-hand sides ``E_j``, j = 0..N, of the coefficient equations

    ``Σ_n (1-n)[f_n conj(ḟ_{n+j}) + conj(f_n) ḟ_{n-j}] = 2δ_{j0}``.

    """
    N = f.size - 1
    w = 1 - np.arange(N + 1)
    out = np.empty(N + 1, dtype=complex)
    for j in range(N + 1):
        a = np.sum(w[:N + 1 - j] * f[:N + 1 - j] * np.conj(df[j:]))
        b = np.sum(w[j:] * np.conj(f[j:]) * df[:N + 1 - j])
        out[j] = a + b
    return out


def lg_rates(s: LgPolyState) -> np.ndarray:
    """Solve the coefficient equations for ``ḟ_0 .. ḟ_N`` (``ḟ_0`` real)."""
    f = s.coeffs
    size = 2 * s.N + 1
    matrix = np.empty((size, size))
    for col in range(size):
        e = np.zeros(size)
        e[col] = 1.0
        r = _residual(f, _unpack(e))
        matrix[:, col] = _pack(r)
    rhs = np.zeros(size)
    rhs[0] = 2.0
    return _unpack(np.linalg.solve(matrix, rhs))


def _nodes(N: int) -> np.ndarray:
    m = max(16 * (N + 1), MIN_NODES)
    return np.exp(2j * np.pi * np.arange(m) / m)


def cusp_indicator(s: LgPolyState) -> float:
    """``min |f'| / R`` on the unit circle (1 for a disk, 0 at a cusp)."""
    return float(np.min(np.abs(s.derivative(_nodes(s.N)))) / s.R)


def _guard(s: LgPolyState, tol: Tolerances) -> None:
    indicator = cusp_indicator(s)
    if indicator < tol.eps_cusp:
        raise CuspReached(s.t, indicator)


def lg_general_step(
    s: LgPolyState,
    dt: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> LgPolyState:
    """Advance the coefficients by ``dt`` with one adaptive RK45 solve.

    Raises:
        CuspReached: ``min |f'|/R`` on the unit circle is below
            ``eps_cusp`` before or after the step.
        StepFailure: The integrator failed.

    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    _guard(s, tol)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return _pack(lg_rates(LgPolyState(_unpack(y), t)))

    sol = solve_ivp(
        rhs, (s.t, s.t + dt), _pack(s.coeffs), method="RK45",
        rtol=tol.rtol, atol=tol.atol,
    )
    if sol.status != 0:
        raise StepFailure(float(sol.t[-1]), sol.message)

    out = LgPolyState(_unpack(sol.y[:, -1]), s.t + dt)
    _guard(out, tol)
    logger.debug("lg step to t=%.6g, R=%.6g", out.t, out.R)
    return out


def lg_evolve(
    s: LgPolyState,
    t_end: float,
    dt: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list[LgPolyState]:
    """Trajectory of `lg_general_step` from ``s.t`` to ``t_end``.

    Raises:
        CuspReached: The guard fired along the way.

    """
    states = [s]
    while states[-1].t < t_end - 1e-15:
        step = min(dt, t_end - states[-1].t)
        states.append(lg_general_step(states[-1], step, tol))
    return states


def lg_conserved(s: LgPolyState, k: int) -> complex:
    """``I_k = ∮ du/(2πiu) u f'(u) conj(f(u)) / f(u)^(k+1)``.

    Trapezoidal rule on the unit circle; ``I_k`` vanishes for ``k >= N``
    and ``I_(N-1) = R^(1-N) conj(f_N)``.

    """
    if k < 0:
        raise ValueError("k must be non-negative")
    u = _nodes(s.N + k)
    f = s.at(u)
    return complex(np.mean(u * s.derivative(u) * np.conj(f) / f ** (k + 1)))


def lg_velocity(s: LgPolyState, w: Any) -> np.ndarray:
    """``∂_t f(w)`` from the Loewner chain ``w f'(w) H(w)``.

    ``H`` is analytic outside the unit disk with real part ``|f'|^-2`` on
    the circle; its Fourier coefficients come from an FFT. Agrees with
    the coefficient equations solved by `lg_rates`.

    """
    u = _nodes(s.N)
    m = u.size
    rho = 1 / np.abs(s.derivative(u)) ** 2
    c = np.fft.fft(rho) / m
    w = np.asarray(w, dtype=complex)
    k = np.arange(1, m // 2)
    H = c[0].real + 2 * np.sum(c[m - k] * w[..., None] ** (-k), axis=-1)
    return w * s.derivative(w) * H

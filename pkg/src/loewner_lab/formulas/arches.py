"""Pure partition functions for two arches joining four boundary points
``0 < x < 1 < ∞``, and the Ising crossing formulas they produce.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math

from scipy.integrate import (
    quad,
    solve_ivp,
)
from scipy.special import gamma

from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import Arch
from ..errors import (
    DomainError,
    StepFailure,
)

SERIES_LIMIT = 0.5
MAX_TERMS = 4000


def _parameters(kappa: float) -> tuple[float, float, float]:
    return 4 / kappa, (12 - kappa) / kappa, 8 / kappa


def _series(x: float, kappa: float) -> tuple[float, float]:
    """Regular solution ``G`` of
    ``κ²x(1-x)G'' + 8κ(1-2x)G' - 4(12-κ)G = 0`` with ``G(0) = 1``, and
    ``G'``, by its power series (``|x| <= 1/2``).

    """
    a, b, c = _parameters(kappa)
    term, value, slope = 1.0, 1.0, 0.0
    for m in range(MAX_TERMS):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1))
        if x == 0:
            slope = term
            break
        value += term * x ** (m + 1)
        slope += (m + 1) * term * x ** m
        if abs(term * x ** (m + 1)) < 1e-17 * abs(value):
            break
    return value, slope


def _regular_solution(x: float, kappa: float, tol: Tolerances) -> float:
    if x <= SERIES_LIMIT:
        return _series(x, kappa)[0]

    def rhs(s: float, y: list[float]) -> list[float]:
        g, dg = y
        return [dg, (4 * (12 - kappa) * g - 8 * kappa * (1 - 2 * s) * dg)
                / (kappa * kappa * s * (1 - s))]

    sol = solve_ivp(
        rhs, (SERIES_LIMIT, x), list(_series(SERIES_LIMIT, kappa)),
        method="DOP853", rtol=tol.rtol * 1e-2, atol=tol.atol * 1e-2,
    )
    if sol.status != 0:
        raise StepFailure(float(sol.t[-1]), sol.message)
    return float(sol.y[0, -1])


def _z_two(x: float, kappa: float, tol: Tolerances) -> float:
    a, b, c = _parameters(kappa)
    norm = gamma(a) * gamma(b) / (gamma(c) * gamma(a + b - c))
    return (
        norm * (x * (1 - x)) ** (2 / kappa) * _regular_solution(x, kappa, tol)
    )


def arch_partition(
    x: float,
    kappa: float,
    which: Arch,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """Pure partition function of arch configuration ``which``.

    ``Z_I`` joins ``[0, x]`` and ``[1, ∞]`` and behaves as
    ``x^{(κ-6)/κ}`` when ``x -> 0``; ``Z_II(x) = Z_I(1 - x)``.

    Raises:
        StepFailure: The hypergeometric ODE could not be integrated.

    """
    if not 0 < x < 1:
        raise DomainError("x must lie in (0, 1)")
    if not 0 < kappa < 8:
        raise DomainError("kappa must lie in (0, 8)")
    if Arch(which) is Arch.I:
        return _z_two(1 - x, kappa, tol)
    return _z_two(x, kappa, tol)


def arch_prob_I(
    x: float,
    kappa: float,
    p_I: float = 1.0,
    p_II: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """``p_I Z_I / (p_I Z_I + p_II Z_II)``."""
    if p_I < 0 or p_II < 0 or p_I + p_II == 0:
        raise DomainError("weights must be non-negative and not both zero")
    z1 = p_I * arch_partition(x, kappa, Arch.I, tol)
    z2 = p_II * arch_partition(x, kappa, Arch.II, tol)
    return z1 / (z1 + z2)


def arch_prob_II(
    x: float,
    kappa: float,
    p_I: float = 1.0,
    p_II: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    return 1 - arch_prob_I(x, kappa, p_I, p_II, tol)


def _ising_density(y: float) -> float:
    return (y * (1 - y)) ** (2 / 3) / (1 - y + y * y) ** 2


def ising_spin_crossing(x: float) -> float:
    """Spin-cluster crossing probability at κ = 3,
    ``∫_x^1 ρ / ∫_0^1 ρ`` with ``ρ(y) = (y(1-y))^{2/3}/(1-y+y²)²``.

    """
    if not 0 <= x <= 1:
        raise DomainError("x must lie in [0, 1]")
    part, _ = quad(_ising_density, x, 1, epsabs=1e-14, epsrel=1e-12)
    whole, _ = quad(_ising_density, 0, 1, epsabs=1e-14, epsrel=1e-12)
    return part / whole


def fk_ising_crossing(x: float) -> float:
    """FK-cluster crossing probability at κ = 16/3 (closed form)."""
    if not 0 <= x <= 1:
        raise DomainError("x must lie in [0, 1]")
    left = math.sqrt((1 - x) + (1 - x) ** 1.5)
    right = math.sqrt(x + x ** 1.5)
    return left / (left + right)

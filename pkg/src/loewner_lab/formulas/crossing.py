"""Hitting and crossing probabilities.

Every formula is evaluated from an integral representation with
``scipy.integrate.quad``; singular endpoints are removed by a power
substitution before integrating.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging

from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import (
    ellipkm1,
    expit,
    gamma,
)

from ..errors import DomainError

logger = logging.getLogger(__name__)

QUAD_OPTIONS = dict(epsabs=1e-14, epsrel=1e-12, limit=200)


def _check_dense_phase(kappa: float) -> None:
    if not 4 < kappa < 8:
        raise DomainError("kappa must lie in (4, 8)")


def _clip(p: float) -> float:
    return min(max(p, 0.0), 1.0)


def hitting_prob(x: float, X: float, kappa: float) -> float:
    """Probability that chordal SLE_κ started at 0 does not touch
    ``[x, X]``, for ``4 < κ < 8``.

    With ``s = x/X`` it equals
    ``Γ(4/κ) s^{(κ-4)/κ} / [Γ((κ-4)/κ) Γ((8-κ)/κ)]
    ∫_0^1 σ^{-4/κ} (1 - sσ)^{2(4-κ)/κ} dσ``; the substitution
    ``σ = u^{κ/(κ-4)}`` removes the singularity at ``σ = 0``.

    """
    _check_dense_phase(kappa)
    if not 0 < x < X:
        raise DomainError("need 0 < x < X")
    s = x / X
    a = (kappa - 4) / kappa
    b = (8 - kappa) / kappa
    p = 1 / a
    power = 2 * (4 - kappa) / kappa
    integral, err = quad(lambda u: (1 - s * u ** p) ** power, 0, 1,
                         **QUAD_OPTIONS)
    logger.debug("hitting integral %.17g (+/- %.2g)", integral, err)
    prefactor = gamma(4 / kappa) / (gamma(a) * gamma(b))
    return _clip(prefactor * s ** a * p * integral)


def cardy_halfplane(a: float, b: float, kappa: float) -> float:
    """Crossing probability for the boundary points ``a < 0 < b``,

    ``Γ(2c)/Γ(c)² ∫_r^∞ σ^{-4/κ} (1+σ)^{-2c} dσ`` with ``c = (κ-4)/κ``
    and ``r = -a/b``. Satisfies ``p(a, b) + p(-b, -a) = 1``.

    """
    _check_dense_phase(kappa)
    if not a <= 0 < b:
        raise DomainError("need a <= 0 < b")
    c = (kappa - 4) / kappa
    p = 1 / c
    r = -a / b
    lower = r ** c
    integral, _ = quad(lambda v: (1 + v ** p) ** (-2 * c), lower, math.inf,
                       **QUAD_OPTIONS)
    return _clip(gamma(2 * c) / gamma(c) ** 2 * p * integral)


def _cardy_eta_prob(eta: float) -> float:
    """``Γ(2/3)/Γ(1/3)² ∫_0^η t^{-2/3}(1-t)^{-2/3} dt`` via ``t = v³``."""
    if eta > 0.5:
        return 1 - _cardy_eta_prob(1 - eta)
    integral, _ = quad(lambda v: (1 - v ** 3) ** (-2 / 3), 0, eta ** (1 / 3),
                       **QUAD_OPTIONS)
    return 3 * gamma(2 / 3) / gamma(1 / 3) ** 2 * integral


def cardy_rectangle(r: float) -> float:
    """Probability of a top-to-bottom percolation crossing of a rectangle
    with height/width ratio ``r``.

    The elliptic parameter ``m = k²`` solves ``K(1-m) / 2K(m) = 1/r``
    (``K`` in the parameter convention of `scipy.special.ellipk`), and
    ``η = ((1-k)/(1+k))²``. A square gives 1/2; the probability
    decreases with ``r``.

    """
    if not r > 0:
        raise DomainError("aspect ratio must be positive")

    # m = expit(y) keeps both m and 1 - m accurate near the ends
    def mismatch(y: float) -> float:
        return ellipkm1(expit(y)) / (2 * ellipkm1(expit(-y))) - 1 / r

    if mismatch(-700.0) < 0 or mismatch(700.0) > 0:
        raise DomainError(f"aspect ratio {r!r} is out of range")
    y = brentq(mismatch, -700.0, 700.0, xtol=1e-14, rtol=1e-15)
    m, m1 = expit(y), expit(-y)
    k = math.sqrt(m)
    eta = (m1 / (1 + k) / (1 + k)) ** 2
    return _clip(_cardy_eta_prob(eta))


def cardy_triangle(x: float) -> float:
    """Crossing probability in the equilateral triangle: exactly ``x``."""
    if not 0 <= x <= 1:
        raise DomainError("x must lie in [0, 1]")
    return float(x)

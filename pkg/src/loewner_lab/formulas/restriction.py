"""Restriction property of SLE_{8/3}.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


from ..errors import DomainError
from .cft import cft_data

RESTRICTION_KAPPA = 8 / 3


def semidisc_derivative(x: float, r: float) -> float:
    """``φ'(0)`` for the normalized map removing the semi-disc of radius
    ``r`` centred at ``x``: ``φ(z) = z - x + r²/(z - x) + x + r²/x``.

    """
    return 1 - r * r / (x * x)


def restriction_prob_semidisc(x: float, r: float) -> float:
    """Probability that chordal SLE_{8/3} avoids the semi-disc of radius
    ``r`` centred at ``x > r``: ``φ'(0)^{5/8}``.

    """
    if not 0 < r < x:
        raise DomainError("need 0 < r < x")
    exponent = cft_data(RESTRICTION_KAPPA).h12
    return semidisc_derivative(x, r) ** exponent

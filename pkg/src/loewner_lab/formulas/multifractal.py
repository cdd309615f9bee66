"""Multifractal spectrum of harmonic measure on SLE_κ hulls.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math

from ..errors import DomainError


def multifractal_tau(n: float, kappa: float) -> float:
    """Exponent of the ``n``-th moment of harmonic measure,

    ``τ_n = (n-1)/2 + (κ+4)/16κ [√(16nκ + (κ-4)²) - (κ+4)]``.

    Invariant under ``κ -> 16/κ``; ``τ_1 = 0`` and ``τ'(1) = 1``.

    """
    if not kappa > 0:
        raise DomainError("kappa must be positive")
    disc = 16 * n * kappa + (kappa - 4) ** 2
    if disc < 0:
        raise DomainError(f"n={n} is below the branch point of the spectrum")
    return (n - 1) / 2 + (kappa + 4) / (16 * kappa) * (
        math.sqrt(disc) - (kappa + 4)
    )


def multifractal_f(alpha: float, kappa: float) -> float:
    """Legendre transform of `multifractal_tau`, for ``α > 1/2``."""
    if not alpha > 0.5:
        raise DomainError("alpha must exceed 1/2")
    if not kappa > 0:
        raise DomainError("kappa must be positive")
    return (
        (kappa + 4) ** 2 / (16 * kappa) * (3 * alpha - 2) / (2 * alpha - 1)
        - (kappa - 4) ** 2 / (16 * kappa) * alpha
    )

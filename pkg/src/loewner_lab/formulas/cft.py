"""Central charges, conformal weights and fractal dimensions as functions
of κ.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


from typing import (
    Annotated,
    Union,
)

from .._internals import (
    _Record,
    _Unset,
    _UnsetType,
)
from ..errors import DomainError


class CftData(_Record):
    """Conformal data attached to SLE_κ (and SLE(κ, ρ) when ``rho`` is
    given).

    The n-dependent quantities are methods: `h_1_nplus1`, `h0_n_bulk`
    and `d_kappa_n`.

    """
    kappa: Annotated[float, "kappa"]
    c: Annotated[float, "c"]
    h12: Annotated[float, "h12"]
    h13: Annotated[float, "h13"]
    h0_half_boundary: Annotated[float, "h0_half_boundary"]
    d_kappa: Annotated[float, "d_kappa"]
    rho: Annotated[Union[float, _UnsetType], "rho"] = _Unset
    h_plus: Annotated[Union[float, _UnsetType], "h_plus"] = _Unset
    h_minus: Annotated[Union[float, _UnsetType], "h_minus"] = _Unset

    def h_1_nplus1(self, n: float) -> float:
        """``h_{1;n+1} = n(4 + 2n - κ)/2κ``."""
        return n * (4 + 2 * n - self.kappa) / (2 * self.kappa)

    def h0_n_bulk(self, n: float) -> float:
        """Bulk weight of the n-leg operator, ``[4n² - (κ-4)²]/16κ``."""
        k = self.kappa
        return (4 * n * n - (k - 4) ** 2) / (16 * k)

    def d_kappa_n(self, n: float) -> float:
        """Dimension of the set where ``n`` curves meet,
        ``[(κ+4)² - 4n²]/8κ``.

        """
        return 2 - 2 * self.h0_n_bulk(n)


def cft_data(
    kappa: float, rho: Union[float, _UnsetType] = _Unset
) -> CftData:
    """Build the `CftData` for ``κ`` (and optionally ``ρ``)."""
    if not kappa > 0:
        raise DomainError("kappa must be positive")
    k = float(kappa)
    extra = {}
    if rho is not _Unset:
        r = float(rho)
        extra = dict(
            rho=r,
            h_plus=r * (r + 4 - k) / (4 * k),
            h_minus=(r + 2) * (r + 6 - k) / (4 * k),
        )
    return CftData(
        kappa=k,
        c=(6 - k) * (3 * k - 8) / (2 * k),
        h12=(6 - k) / (2 * k),
        h13=(8 - k) / k,
        h0_half_boundary=(k - 2) * (6 - k) / (16 * k),
        d_kappa=1 + k / 8,
        **extra,
    )


def zeta(n: int) -> float:
    """Brownian intersection exponent ``ζ_n = (4n² - 1)/24``."""
    return (4 * n * n - 1) / 24


def zeta_tilde(n: int) -> float:
    """Half-plane intersection exponent ``ζ̃_n = n(2n + 1)/6``."""
    return n * (2 * n + 1) / 6

"""SLE sampling parameters.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import dataclasses
from typing import Union

from .._internals import (
    _Unset,
    _UnsetType,
)
from ..enums import Geometry


@dataclasses.dataclass(eq=False, frozen=True)
class SleParams:
    """Parameters of a sampled driving function.

    Args:
        kappa: Diffusion constant κ ≥ 0 (κ = 0 gives the zero driving).
        T: Final capacity time.
        dt: Grid step.
        seed: 64-bit run seed.
        index: Sample index inside a farm; ``(seed, index)`` selects the
            random stream.
        geometry: Reference domain.
        scale: Λ (radial) or Δ (dipolar); defaults per geometry.
        rho: ρ of SLE(κ, ρ); only used by `sample_sle_kr`.

    """
    kappa: float
    T: float = 1.0
    dt: float = 1e-3
    seed: int = 0
    index: int = 0
    geometry: Geometry = Geometry.chordal
    scale: Union[float, _UnsetType] = _Unset
    rho: Union[float, _UnsetType] = _Unset

    def __post_init__(self) -> None:
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        if not (self.kappa >= 0 and math.isfinite(self.kappa)):
            raise ValueError("kappa must be a finite non-negative number")
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if not self.T >= self.dt * (1 - 1e-12):
            raise ValueError("T must be at least dt")
        if self.scale is _Unset:
            object.__setattr__(self, "scale", self.geometry.default_scale)
        elif not self.scale > 0:
            raise ValueError("scale must be positive")

    @property
    def drift(self) -> float:
        """α = ρ − (κ − 6)/2 of SLE(κ, ρ); zero when ρ is unset."""
        if self.rho is _Unset:
            return 0.0
        return self.rho - (self.kappa - 6) / 2

    def with_index(self, index: int) -> "SleParams":
        return dataclasses.replace(self, index=index)

"""Driving functions, traces and swallowing results.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import math
import dataclasses
from typing import Union
from collections.abc import Generator
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

import numpy as np

from .._internals import (
    _Unset,
    _UnsetType,
)
from .._export import (
    SvgCanvas,
    Target,
    write_csv,
    write_text,
)
from ..enums import Geometry


@dataclasses.dataclass(eq=False, frozen=True)
class DrivingPath:
    """A sampled real driving function on a capacity-time grid.

    The driving is piecewise constant: on ``(t[k-1], t[k]]`` it equals
    ``values[k]``.

    Args:
        times: Strictly increasing grid starting at 0.
        values: Driving values, one per grid time.
        geometry: Reference domain of the evolution.
        scale: Λ for radial (circumference Λπ), Δ for dipolar (width Δπ).
            Defaults to the geometry's default scale.

    """
    times: np.ndarray
    values: np.ndarray
    geometry: Geometry = Geometry.chordal
    scale: Union[float, _UnsetType] = _Unset

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        times.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "geometry", Geometry(self.geometry))

        if times.ndim != 1 or times.size == 0:
            raise ValueError("times must be a nonempty 1-d array")
        if values.shape != times.shape:
            raise ValueError("values and times must have the same length")
        if times[0] != 0.0:
            raise ValueError("times must start at 0")
        if np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")

        if self.scale is _Unset:
            object.__setattr__(self, "scale", self.geometry.default_scale)
        elif not self.scale > 0:
            raise ValueError("scale must be positive")

    @property
    def final_time(self) -> float:
        return float(self.times[-1])

    def __len__(self) -> int:
        return self.times.size

    def value_at(self, t: float) -> float:
        """Driving value at ``t`` under the piecewise-constant rule."""
        k = int(np.searchsorted(self.times, t, side="left"))
        return float(self.values[min(k, self.times.size - 1)])

    def intervals(
        self, until: Union[float, None] = None
    ) -> Generator[tuple[float, float, float], None, None]:
        """Yield ``(start, duration, constant)`` for each interval.

        The last interval is cut at ``until`` when it falls inside it.

        """
        end = self.final_time if until is None else until
        if end > self.final_time * (1 + 1e-12):
            raise ValueError(
                f"time {end!r} beyond the last grid time {self.final_time!r}"
            )
        for k in range(1, self.times.size):
            start = float(self.times[k - 1])
            if start >= end:
                return
            stop = min(float(self.times[k]), end)
            yield (start, stop - start, float(self.values[k]))

    def rescaled(self, factor: float) -> Self:
        """The path ``factor * ξ(t / factor²)`` on the matching grid."""
        return dataclasses.replace(
            self,
            times=self.times * factor**2,
            values=self.values * factor,
        )

    def to_csv(self, target: Target) -> None:
        write_csv(target, ("t", "xi"), zip(self.times, self.values))

    @classmethod
    def from_function(
        cls,
        fn,
        final_time: float,
        dt: float,
        geometry: Geometry = Geometry.chordal,
    ) -> Self:
        """Sample a deterministic driving ``fn(t)`` on a regular grid."""
        times = time_grid(final_time, dt)
        return cls(times, np.array([fn(t) for t in times]), geometry)


def time_grid(final_time: float, dt: float) -> np.ndarray:
    """Regular grid ``0, dt, 2dt, ...`` ending exactly at ``final_time``."""
    if dt <= 0 or final_time < dt * (1 - 1e-12):
        raise ValueError("need dt > 0 and final_time >= dt")
    n = math.ceil(final_time / dt - 1e-9)
    times = dt * np.arange(n + 1, dtype=float)
    times[-1] = final_time
    return times


def closing_arc(radius: float = 1.0, dt: float = 1e-4) -> DrivingPath:
    """Driving ``ξ_t = 3[R - sqrt(R² - 2t)]`` up to ``t_c = R²/2``.

    Its trace is the half circle from 0 to ``2R`` centred at ``R``; at
    ``t_c`` the uniformizing map is ``z + R²/(z - R)``.

    """
    t_c = radius**2 / 2
    times = time_grid(t_c, dt)
    values = 3 * (radius - np.sqrt(np.clip(radius**2 - 2 * times, 0, None)))
    return DrivingPath(times, values)


@dataclasses.dataclass(eq=False, frozen=True)
class TraceSample:
    """Trace points ``γ(t_k)`` on the grid of their driving path."""
    points: np.ndarray
    times: np.ndarray
    geometry: Geometry = Geometry.chordal

    @property
    def tip(self) -> complex:
        return complex(self.points[-1])

    def to_csv(self, target: Target) -> None:
        """Write columns ``t,re,im`` with 17 significant digits."""
        write_csv(
            target,
            ("t", "re", "im"),
            zip(self.times, self.points.real, self.points.imag),
        )

    def to_svg(
        self,
        target: Target,
        canvas: SvgCanvas = SvgCanvas(),
    ) -> None:
        write_text(target, canvas.polyline(self.points))


@dataclasses.dataclass(eq=False, frozen=True)
class SwallowResult:
    """Outcome of a forward-map query.

    Args:
        value: ``g_T(z)`` while the point is alive, ``nan`` otherwise.
        tau: The swallowing time, or ``None`` if the point is alive.

    """
    value: complex
    tau: Union[float, None] = None

    @property
    def alive(self) -> bool:
        return self.tau is None

    @property
    def swallowed(self) -> bool:
        return self.tau is not None

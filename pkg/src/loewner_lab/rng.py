"""Seeded, splittable random streams.

Every sampler draws from ``substream(seed, index)``: a Philox
counter-based generator keyed by the pair ``(seed, index)``. Sample ``i``
of a farm always sees the same stream, whatever thread runs it.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import time
from typing import Union

import numpy as np

_MASK64 = (1 << 64) - 1

Seed = Union[int, np.random.Generator]


def substream(seed: int, index: int = 0) -> np.random.Generator:
    """Return the generator for sample ``index`` of the run ``seed``."""
    key = np.array([seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def as_generator(seed: Seed) -> np.random.Generator:
    """Accept either a seed or an existing generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return substream(int(seed))


def fresh_seed() -> int:
    """A clock-derived 63-bit seed, used when the caller gives none."""
    return time.time_ns() & ((1 << 63) - 1)


class IntPool:
    """Uniform integers in ``[0, high)`` served from a refilled cache.

    Single draws from a generator are slow in tight walker loops; the pool
    draws ``size`` values at a time.

    """
    __slots__ = ("_rng", "_high", "_size", "_values", "_cursor")

    def __init__(
        self, rng: np.random.Generator, high: int, size: int = 8192
    ) -> None:
        self._rng = rng
        self._high = high
        self._size = size
        self._values = rng.integers(high, size=size).tolist()
        self._cursor = 0

    def next(self) -> int:
        if self._cursor >= self._size:
            self._values = self._rng.integers(
                self._high, size=self._size
            ).tolist()
            self._cursor = 0
        value = self._values[self._cursor]
        self._cursor += 1
        return value

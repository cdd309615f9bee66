"""Numerical tolerances and run-time settings.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import os
import logging
import dataclasses
from typing import Union

logger = logging.getLogger(__name__)

THREADS_ENV = "LOEWNER_LAB_THREADS"


@dataclasses.dataclass(eq=False, frozen=True)
class Tolerances:
    """Tolerances used by the numerical kernels.

    Args:
        eps_swallow: A point is swallowed once ``|(g - ξ)²|`` drops below
            this value (capacity units).
        eps_lift: Imaginary lift of the driving point when building a
            trace.
        rtol: Relative tolerance handed to the adaptive integrators.
        atol: Absolute tolerance handed to the adaptive integrators.
        eps_collide: Gap below which two driven points have collided.
        eps_cusp: Cusp guard for Laplacian growth.

    """
    eps_swallow: float = 1e-6
    eps_lift: float = 1e-8
    rtol: float = 1e-10
    atol: float = 1e-12
    eps_collide: float = 1e-4
    eps_cusp: float = 1e-3

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            if not getattr(self, field.name) > 0:
                raise ValueError(f"{field.name} must be positive")

    def replace(self, **changes: float) -> "Tolerances":
        return dataclasses.replace(self, **changes)


DEFAULT_TOLERANCES = Tolerances()


def resolve_threads(threads: Union[int, None] = None) -> int:
    """Resolve the sample-farm width.

    An explicit value wins, then the ``LOEWNER_LAB_THREADS`` environment
    variable, then the number of available CPUs.

    """
    if threads is not None:
        if threads < 1:
            raise ValueError("threads must be at least 1")
        return threads

    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            logger.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
        else:
            if value >= 1:
                return value
            logger.warning("ignoring non-positive %s=%r", THREADS_ENV, raw)

    return os.cpu_count() or 1

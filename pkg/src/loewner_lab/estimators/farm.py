"""Seed-split sample farms.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import logging
from concurrent.futures import ThreadPoolExecutor
from typing import (
    TypeVar,
    Union,
)
from collections.abc import Callable

import numpy as np

from ..config import resolve_threads
from ..rng import substream

logger = logging.getLogger(__name__)

T = TypeVar("T")


def run_farm(
    fn: Callable[[int, np.random.Generator], T],
    n: int,
    seed: int,
    threads: Union[int, None] = None,
) -> list[T]:
    """Evaluate ``fn(i, substream(seed, i))`` for ``i < n``.

    Results come back in index order, so the output does not depend on
    the number of threads.

    """
    if n < 0:
        raise ValueError("n must be non-negative")
    workers = resolve_threads(threads)
    logger.debug("farm: %d samples on %d threads (seed %d)", n, workers, seed)
    if workers == 1 or n <= 1:
        return [fn(i, substream(seed, i)) for i in range(n)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: fn(i, substream(seed, i)), range(n)))

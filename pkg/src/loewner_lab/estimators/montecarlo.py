"""Monte Carlo probability estimates with Wilson score intervals.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
from typing import (
    Annotated,
    Union,
)
from collections.abc import Callable

import numpy as np
from scipy.stats import binomtest

from .._internals import _Record
from .farm import run_farm

logger = logging.getLogger(__name__)

CONFIDENCE = 0.95


class McEstimate(_Record):
    """Binomial estimate of a probability.

    Args:
        successes: Number of trials where the event occurred.
        trials: Number of decided trials.
        p_hat: ``successes / trials``.
        ci_low: Lower end of the 95% Wilson interval.
        ci_high: Upper end of the 95% Wilson interval.
        seed: Seed of the farm that produced it.

    """
    successes: Annotated[int, "successes"]
    trials: Annotated[int, "trials"]
    p_hat: Annotated[float, "p_hat"]
    ci_low: Annotated[float, "ci_low"]
    ci_high: Annotated[float, "ci_high"]
    seed: Annotated[Union[int, None], "seed"] = None

    def __post_init__(self) -> None:
        if not 0 <= self.successes <= self.trials:
            raise ValueError("successes must lie in [0, trials]")
        if not 0 <= self.p_hat <= 1:
            raise ValueError("p_hat must lie in [0, 1]")
        if not self.ci_low <= self.p_hat <= self.ci_high:
            raise ValueError("the interval must contain p_hat")

    @property
    def sigma(self) -> float:
        """Binomial standard error of ``p_hat``."""
        if self.trials == 0:
            return math.inf
        return math.sqrt(self.p_hat * (1 - self.p_hat) / self.trials)

    def within(self, p: float, n_sigma: float = 3.0) -> bool:
        """Whether ``p`` lies within ``n_sigma`` standard errors, or inside
        the Wilson interval when the estimate is degenerate.

        """
        if self.ci_low <= p <= self.ci_high:
            return True
        return abs(self.p_hat - p) <= n_sigma * self.sigma

    @classmethod
    def from_counts(
        cls, successes: int, trials: int, seed: Union[int, None] = None
    ) -> "McEstimate":
        if trials == 0:
            return cls(0, 0, 0.0, 0.0, 1.0, seed)
        p_hat = successes / trials
        ci = binomtest(successes, trials).proportion_ci(
            confidence_level=CONFIDENCE, method="wilson"
        )
        return cls(
            successes,
            trials,
            p_hat,
            min(float(ci.low), p_hat),
            max(float(ci.high), p_hat),
            seed,
        )


def mc_probability(
    event_fn: Callable[[int, np.random.Generator], bool],
    n_trials: int,
    seed: int,
    threads: Union[int, None] = None,
) -> McEstimate:
    """Estimate ``P[event]`` from ``n_trials`` seed-split samples.

    ``event_fn(i, rng)`` receives the sample index and its stream and may
    return ``None`` for an undecided sample; those are left out of the
    count.

    """
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    outcomes = run_farm(event_fn, n_trials, seed, threads)
    decided = [bool(o) for o in outcomes if o is not None]
    if len(decided) < n_trials:
        logger.warning(
            "%d of %d samples undecided", n_trials - len(decided), n_trials
        )
    return McEstimate.from_counts(sum(decided), len(decided), seed)

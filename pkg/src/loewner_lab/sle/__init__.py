"""Random driving functions for SLE and the two-curve system.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .params import SleParams
from .samplers import (
    sample,
    sample_chordal,
    sample_dipolar,
    sample_radial,
    sample_sle_kr,
    sample_values,
)
from .two_sle import (
    TwoSleState,
    two_sle_run,
    two_sle_step,
)


__all__ = (
    "SleParams",
    "sample",
    "sample_chordal",
    "sample_dipolar",
    "sample_radial",
    "sample_sle_kr",
    "sample_values",
    "TwoSleState",
    "two_sle_run",
    "two_sle_step",
)

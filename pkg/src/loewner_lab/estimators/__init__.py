"""Statistical layer: exponent fits, Monte Carlo estimates, box counting
and dipolar classification.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .farm import run_farm
from .fitting import (
    FitReport,
    fit_dimension,
    fit_from_groups,
)
from .montecarlo import (
    McEstimate,
    mc_probability,
)
from .boxcount import (
    box_count,
    densify,
    trace_dimension,
)
from .dipolar import (
    LeftPassage,
    classify_dipolar_outcome,
    left_passage_estimate,
)
from .sle import (
    hitting_estimate,
    restriction_estimate,
    sle_trace_dimension,
)
from .lattice import (
    interface_fit,
    lerw_fit,
    triangle_crossing_estimate,
)


__all__ = (
    "run_farm",
    "FitReport",
    "fit_dimension",
    "fit_from_groups",
    "McEstimate",
    "mc_probability",
    "box_count",
    "densify",
    "trace_dimension",
    "LeftPassage",
    "classify_dipolar_outcome",
    "left_passage_estimate",
    "hitting_estimate",
    "restriction_estimate",
    "sle_trace_dimension",
    "interface_fit",
    "lerw_fit",
    "triangle_crossing_estimate",
)

"""Deterministic Loewner machinery: slit steps, traces, forward maps.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .driving import (
    DrivingPath,
    SwallowResult,
    TraceSample,
    closing_arc,
    time_grid,
)
from .steps import (
    chordal_forward_step,
    chordal_slit_step,
    dipolar_field,
    flow,
    radial_field,
)
from .maps import (
    ForwardState,
    conformal_radius,
    forward_batch,
    forward_map,
    swallowing_times,
    trace,
    trace_batch,
)


__all__ = (
    "DrivingPath",
    "SwallowResult",
    "TraceSample",
    "closing_arc",
    "time_grid",
    "chordal_forward_step",
    "chordal_slit_step",
    "dipolar_field",
    "flow",
    "radial_field",
    "ForwardState",
    "conformal_radius",
    "forward_batch",
    "forward_map",
    "swallowing_times",
    "trace",
    "trace_batch",
)

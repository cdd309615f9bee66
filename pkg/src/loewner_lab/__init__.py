"""Simulations of two-dimensional conformally invariant growth, checked
against exact formulas.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__title__ = "loewner-lab"
__author__ = "Tanner Corcoran"
__email__ = "tannerbcorcoran@gmail.com"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"
__version__ = "0.1.0"
__description__ = (
    "Simulations of conformally invariant growth checked against exact "
    "formulas."
)


from .config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from .enums import (
    Arch,
    Color,
    DipolarOutcome,
    Geometry,
    NavigatorVariant,
    SizeProxy,
    WalkMode,
)
from .errors import (
    CuspReached,
    DegenerateFit,
    DerivativeUnderflow,
    DivergentSeries,
    DomainError,
    LoewnerLabError,
    NumericalFailure,
    StepFailure,
    Swallowed,
    Undecided,
)
from .loewner import (
    DrivingPath,
    TraceSample,
    forward_map,
    trace,
)
from .sle import SleParams
from .lattice import (
    HexDomain,
    LatticeWalk,
)
from .growth import (
    DlaCluster,
    HlCluster,
    LgPolyState,
)
from .estimators import (
    FitReport,
    McEstimate,
)


__all__ = (
    "DEFAULT_TOLERANCES",
    "Tolerances",
    "Arch",
    "Color",
    "DipolarOutcome",
    "Geometry",
    "NavigatorVariant",
    "SizeProxy",
    "WalkMode",
    "CuspReached",
    "DegenerateFit",
    "DerivativeUnderflow",
    "DivergentSeries",
    "DomainError",
    "LoewnerLabError",
    "NumericalFailure",
    "StepFailure",
    "Swallowed",
    "Undecided",
    "DrivingPath",
    "TraceSample",
    "forward_map",
    "trace",
    "SleParams",
    "HexDomain",
    "LatticeWalk",
    "DlaCluster",
    "HlCluster",
    "LgPolyState",
    "FitReport",
    "McEstimate",
)

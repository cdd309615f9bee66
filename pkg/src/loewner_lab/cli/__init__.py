"""Command-line front end: ``loewner-lab <group> <command> [flags]``.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

from .main import (
    dispatch,
    main,
)
from .manifest import RunManifest
from .oracles import (
    ORACLES,
    OracleResult,
)
from .parser import build_parser
from .verify import (
    SUITES,
    VerifyReport,
    run_suite,
)


__all__ = (
    "dispatch",
    "main",
    "RunManifest",
    "ORACLES",
    "OracleResult",
    "build_parser",
    "SUITES",
    "VerifyReport",
    "run_suite",
)

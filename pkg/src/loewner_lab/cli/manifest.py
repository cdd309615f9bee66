"""Run manifests.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import enum
import hashlib
import logging
import subprocess
from importlib import metadata
from pathlib import Path
from typing import (
    Any,
    Union,
)
from collections.abc import Mapping

from .. import __version__
from .._internals import (
    _Record,
    _Unset,
    _UnsetType,
)

logger = logging.getLogger(__name__)

DISTRIBUTION = "loewner-lab"

# argparse bookkeeping that is not a run parameter
_PRIVATE = frozenset({
    "handler", "path", "group", "command", "config", "verbose", "out", "seed",
})


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def package_version() -> str:
    """Installed distribution version, or the source tree's when the
    package is not installed.

    """
    try:
        return metadata.version(DISTRIBUTION)
    except metadata.PackageNotFoundError:
        return __version__


def build_description() -> Union[str, None]:
    """``git describe`` of the checkout holding this package, if any."""
    try:
        done = subprocess.run(
            ["git", "describe", "--always", "--dirty", "--tags"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True,
            text=True,
            timeout=5,
            check=True,
        )
    except (OSError, subprocess.SubprocessError) as exc:
        logger.debug("no git description: %s", exc)
        return None
    return done.stdout.strip() or None


def run_parameters(namespace: Mapping[str, Any]) -> dict[str, Any]:
    """Parameters worth recording, in a JSON-friendly form."""
    out = {}
    for key, value in sorted(namespace.items()):
        if key in _PRIVATE or callable(value):
            continue
        if isinstance(value, Path):
            value = str(value)
        elif isinstance(value, enum.Enum):
            value = value.value
        out[key] = value
    return out


class RunManifest(_Record):
    """Everything needed to repeat a command.

    Args:
        command: The command line, config entries included.
        parameters: Resolved parameter values.
        version: Installed package version.
        wall_time: Seconds spent in the command.
        outputs: Digest of every output, keyed by path (``-`` for
            standard output).
        seed: The run seed (unset for deterministic commands).
        build: ``git describe`` of the source checkout, when there is one.

    """
    command: list[str]
    parameters: dict[str, Any]
    version: str
    wall_time: float
    outputs: dict[str, str]
    seed: Union[int, _UnsetType] = _Unset
    build: Union[str, _UnsetType] = _Unset

    def replay(self) -> list[str]:
        """Arguments that reproduce the outputs bit for bit."""
        command = list(self.command)
        if self.seed is not _Unset and not any(
            a == "--seed" or a.startswith("--seed=") for a in command
        ):
            command.append(f"--seed={self.seed}")
        return command

"""Entry point of the ``loewner-lab`` command.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import time
import logging
import argparse
from typing import (
    TextIO,
    Union,
)
from collections.abc import Sequence

from .._export import write_text
from .._internals import _Unset
from ..errors import (
    DomainError,
    NumericalFailure,
)
from ..rng import fresh_seed
from .config import (
    config_tokens,
    read_config,
)
from .manifest import (
    RunManifest,
    build_description,
    digest,
    package_version,
    run_parameters,
)
from .parser import build_parser

logger = logging.getLogger(__name__)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _configure_logging(verbosity: int) -> None:
    logging.basicConfig(
        level=_LEVELS[min(verbosity, len(_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _parse(
    parser: argparse.ArgumentParser, argv: list[str]
) -> tuple[argparse.Namespace, list[str]]:
    """Parse ``argv``, splicing config entries in front of the explicit
    flags so that the flags win.

    """
    args = parser.parse_args(argv)
    if args.config is None:
        return args, argv
    cut = len(args.path)
    merged = argv[:cut] + config_tokens(read_config(args.config)) + argv[cut:]
    return parser.parse_args(merged), merged


def dispatch(
    argv: Union[Sequence[str], None] = None,
    stdout: Union[TextIO, None] = None,
    stderr: Union[TextIO, None] = None,
) -> int:
    """Run one command and return its exit code.

    0 on success, 1 on a numerical failure or a failed verification, 2 on
    a usage error or parameters outside a formula's domain. The run
    manifest is printed to ``stderr`` as JSON.

    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()

    try:
        args, command = _parse(parser, argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (OSError, ValueError) as exc:
        print(f"loewner-lab: config: {exc}", file=stderr)
        return 2

    _configure_logging(args.verbose)
    if args.seed is None:
        args.seed = fresh_seed()
        logger.info("no seed given, using %d", args.seed)

    start = time.perf_counter()
    try:
        output = args.handler(args)
    except NumericalFailure as exc:
        print(f"loewner-lab: {exc}", file=stderr)
        return 1
    except (DomainError, ValueError) as exc:
        print(f"loewner-lab: invalid parameters: {exc}", file=stderr)
        return 2
    wall_time = time.perf_counter() - start

    if args.out == "-":
        stdout.write(output.text)
    else:
        write_text(args.out, output.text)

    manifest = RunManifest(
        command,
        run_parameters(vars(args)),
        package_version(),
        wall_time,
        {args.out: digest(output.text.encode("utf-8"))},
        args.seed,
        build_description() or _Unset,
    )
    print(manifest.to_json(indent=None), file=stderr)
    return output.status


def main() -> None:
    sys.exit(dispatch())

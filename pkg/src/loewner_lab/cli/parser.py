"""The ``loewner-lab`` argument grammar.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import argparse
import dataclasses
from collections.abc import Callable

from .. import __version__
from ..config import Tolerances
from ..enums import (
    Geometry,
    NavigatorVariant,
    SizeProxy,
    WalkMode,
)
from ..estimators.dipolar import HORIZON
from . import commands
from .oracles import ORACLES
from .verify import SUITES


def _common() -> argparse.ArgumentParser:
    """Flags accepted by every leaf command."""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("run")
    group.add_argument("--config", metavar="FILE",
                       help="'key = value' file merged under explicit flags")
    group.add_argument("--seed", type=int, default=None,
                       help="run seed (default: derived from the clock)")
    group.add_argument("--threads", type=int, default=None,
                       help="sample-farm width (default: "
                            "$LOEWNER_LAB_THREADS or the CPU count)")
    group.add_argument("--out", default="-", metavar="PATH",
                       help="output file ('-' for standard output)")
    group.add_argument("-v", "--verbose", action="count", default=0,
                       help="-v for info, -vv for debug logging")
    return parser


def _tolerance_flags() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("tolerances")
    for field in dataclasses.fields(Tolerances):
        group.add_argument(
            "--" + field.name.replace("_", "-"), dest=field.name,
            type=float, default=None,
            help=f"(default: {field.default:g})",
        )
    return parser


def _render_flags() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("rendering")
    group.add_argument("--format", choices=("csv", "svg"), default="csv")
    group.add_argument("--width", type=float, default=800.0,
                       help="SVG viewport width")
    group.add_argument("--height", type=float, default=600.0,
                       help="SVG viewport height")
    group.add_argument("--margin", type=float, default=20.0,
                       help="SVG viewport margin")
    return parser


class _Builder:
    """Adds leaf commands that remember their path and handler."""
    def __init__(self) -> None:
        self.common = _common()
        self.tolerance = _tolerance_flags()
        self.render = _render_flags()

    def leaf(
        self,
        group: "argparse._SubParsersAction",
        path: tuple[str, ...],
        handler: Callable,
        help: str,
        tolerance: bool = False,
        render: bool = False,
    ) -> argparse.ArgumentParser:
        parents = [self.common]
        if tolerance:
            parents.append(self.tolerance)
        if render:
            parents.append(self.render)
        parser = group.add_parser(
            path[-1], parents=parents, help=help, description=help
        )
        parser.set_defaults(handler=handler, path=path)
        return parser


def _sle_flags(parser: argparse.ArgumentParser, T: float, dt: float) -> None:
    parser.add_argument("--kappa", type=float, required=True)
    parser.add_argument("--t", type=float, default=T,
                        help="final capacity time")
    parser.add_argument("--dt", type=float, default=dt, help="grid step")
    parser.add_argument("--scale", type=float, default=None,
                        help="radial Λ or dipolar Δ")


def _point_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--z", type=complex, action="append",
                        help="query point, e.g. --z=1+0.5j (repeatable)")
    parser.add_argument("--points", metavar="CSV",
                        help="CSV file whose first two columns are re, im")


def _add_sle(b: _Builder, root: "argparse._SubParsersAction") -> None:
    sub = root.add_parser("sle", help="sample SLE traces and hulls")
    group = sub.add_subparsers(dest="command", required=True)

    p = b.leaf(group, ("sle", "trace"), commands.sle_trace,
               "sample a driving function and build its trace",
               tolerance=True, render=True)
    _sle_flags(p, 1.0, 1e-3)
    p.add_argument("--geometry", choices=[g.value for g in Geometry],
                   default=Geometry.chordal.value)
    p.add_argument("--rho", type=float, default=None,
                   help="SLE(κ, ρ) drift (dipolar geometry)")

    p = b.leaf(group, ("sle", "hull"), commands.sle_hull,
               "swallowing times and images of query points",
               tolerance=True)
    _sle_flags(p, 1.0, 1e-3)
    p.add_argument("--geometry", choices=[g.value for g in Geometry],
                   default=Geometry.chordal.value)
    _point_flags(p)

    p = b.leaf(group, ("sle", "classify"), commands.sle_classify,
               "left, right or inside outcome of dipolar SLE",
               tolerance=True)
    _sle_flags(p, HORIZON, 1e-2)
    _point_flags(p)


def _add_lattice(b: _Builder, root: "argparse._SubParsersAction") -> None:
    sub = root.add_parser("lattice", help="lattice interfaces and walks")
    group = sub.add_subparsers(dest="command", required=True)

    p = b.leaf(group, ("lattice", "perc"), commands.lattice_perc,
               "percolation exploration interface", render=True)
    p.add_argument("--cols", type=int, default=32)
    p.add_argument("--rows", type=int, default=32)

    p = b.leaf(group, ("lattice", "navigator"), commands.lattice_navigator,
               "harmonic navigator interface and its variants",
               render=True)
    p.add_argument("--cols", type=int, default=32)
    p.add_argument("--rows", type=int, default=32)
    p.add_argument("--variant", choices=[v.value for v in NavigatorVariant],
                   default=NavigatorVariant.harmonic.value)

    p = b.leaf(group, ("lattice", "lerw"), commands.lattice_lerw,
               "loop-erased random walk", render=True)
    p.add_argument("--mode", choices=[m.value for m in WalkMode],
                   default=WalkMode.bessel3.value)
    p.add_argument("--altitude", type=int, default=64,
                   help="target altitude (bessel3)")
    p.add_argument("--steps", type=int, default=4096,
                   help="walk steps (reflecting)")
    p.add_argument("--cols", type=int, default=8,
                   help="domain width (annihilating)")
    p.add_argument("--rows", type=int, default=8,
                   help="domain height (annihilating)")

    p = b.leaf(group, ("lattice", "saw"), commands.lattice_saw,
               "self-avoiding walk by pivot moves", render=True)
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--steps", type=int, default=10_000,
                   help="pivot attempts")


def _add_growth(b: _Builder, root: "argparse._SubParsersAction") -> None:
    sub = root.add_parser("growth", help="Laplacian growth, HL and DLA")
    group = sub.add_subparsers(dest="command", required=True)

    p = b.leaf(group, ("growth", "lg-zn"), commands.growth_lg_zn,
               "radius and β of the Z_n droplet at time t", tolerance=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rc", type=float, default=1.0,
                   help="radius at which the cusp forms")
    p.add_argument("--t", type=float, required=True)

    p = b.leaf(group, ("growth", "lg-evolve"), commands.growth_lg_evolve,
               "coefficient trajectory of a polynomial droplet",
               tolerance=True)
    p.add_argument("--state", metavar="JSON",
                   help="initial LgPolyState (otherwise a Z_n state)")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--radius", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=0.5)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--dt", type=float, default=1e-2)

    p = b.leaf(group, ("growth", "hl"), commands.growth_hl,
               "Hastings-Levitov cluster", render=True)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--lambda0", type=float, default=0.1)
    p.add_argument("--boundary-points", type=int, default=4096)

    p = b.leaf(group, ("growth", "dla"), commands.growth_dla,
               "lattice diffusion-limited aggregation", render=True)
    p.add_argument("--particles", type=int, default=2000)


def _add_oracles(b: _Builder, root: "argparse._SubParsersAction") -> None:
    sub = root.add_parser("oracle", help="evaluate an analytic formula")
    group = sub.add_subparsers(dest="command", required=True,
                               metavar="FORMULA")
    for name, entry in ORACLES.items():
        p = b.leaf(group, ("oracle", name), commands.oracle, entry.help)
        for param in entry.params:
            p.add_argument(
                f"--{param.name}", dest=param.dest, type=param.type,
                choices=param.choices, required=True, help=param.help,
            )


def _add_estimates(b: _Builder, root: "argparse._SubParsersAction") -> None:
    sub = root.add_parser("estimate", help="Monte Carlo estimates")
    group = sub.add_subparsers(dest="command", required=True)

    p = b.leaf(group, ("estimate", "dim"), commands.estimate_dim,
               "fractal dimension by log-log regression", tolerance=True)
    p.add_argument("--model", required=True, choices=(
        "percolation", "navigator", "lerw", "lerw-reflecting", "sle",
    ))
    p.add_argument("--sizes", type=int, nargs="+",
                   default=[16, 32, 64, 128],
                   help="lattice sizes, altitudes or step counts")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--variant", choices=[v.value for v in NavigatorVariant],
                   default=NavigatorVariant.harmonic.value)
    p.add_argument("--proxy", choices=[s.value for s in SizeProxy],
                   default=SizeProxy.max_altitude.value)
    p.add_argument("--kappa", type=float, default=6.0)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--dt", type=float, default=1e-4)

    p = b.leaf(group, ("estimate", "crossing"), commands.estimate_crossing,
               "triangle crossing probability")
    p.add_argument("--side", type=int, default=64)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--samples", type=int, default=10_000)

    p = b.leaf(group, ("estimate", "hitting"), commands.estimate_hitting,
               "probability that chordal SLE misses [x, X]")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--X", type=float, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--paths", type=int, default=5000)
    p.add_argument("--rel-step", type=float, default=1e-3,
                   help="step size relative to the squared nearer gap")

    p = b.leaf(group, ("estimate", "leftpass"), commands.estimate_leftpass,
               "dipolar left-passage and swallowing frequencies",
               tolerance=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--paths", type=int, default=2000)
    p.add_argument("--t", type=float, default=HORIZON)
    p.add_argument("--dt", type=float, default=1e-2)
    _point_flags(p)


def _add_verify(b: _Builder, root: "argparse._SubParsersAction") -> None:
    p = b.leaf(root, ("verify",), commands.verify,
               "run a verification suite", tolerance=True)
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--samples", type=int, default=None,
                   help="Monte Carlo size (default: per suite)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loewner-lab",
        description="Simulate conformally invariant growth and check it "
                    "against exact formulas.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    root = parser.add_subparsers(dest="group", required=True)
    b = _Builder()
    _add_sle(b, root)
    _add_lattice(b, root)
    _add_growth(b, root)
    _add_oracles(b, root)
    _add_estimates(b, root)
    _add_verify(b, root)
    return parser

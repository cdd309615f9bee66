"""Sub-command handlers.

Every handler takes the parsed arguments and returns the primary output
as text; `main.dispatch` writes it and records its digest.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import io
import json
import logging
import argparse
import dataclasses
from typing import Any
from collections.abc import Callable

import numpy as np

from .._export import (
    SvgCanvas,
    Target,
    csv_text,
)
from .._internals import _Unset
from ..config import Tolerances
from ..enums import (
    DipolarOutcome,
    Geometry,
    NavigatorVariant,
    SizeProxy,
    WalkMode,
)
from ..estimators import (
    classify_dipolar_outcome,
    hitting_estimate,
    interface_fit,
    left_passage_estimate,
    lerw_fit,
    sle_trace_dimension,
    triangle_crossing_estimate,
)
from ..formulas import (
    cardy_triangle,
    dipolar_in_prob,
    dipolar_left_prob,
    dipolar_right_prob,
    hitting_prob,
)
from ..growth import (
    HlCluster,
    LgPolyState,
    hl_grow,
    lattice_dla,
    lg_evolve,
    lg_zn_evolve,
    lg_zn_state,
)
from ..lattice import (
    HexDomain,
    SquareDomain,
    lerw_domain,
    lerw_halfplane,
    lerw_reflecting,
    navigator_interface,
    percolation_interface,
    pivot_chain,
    straight_walk,
)
from ..loewner import (
    forward_batch,
    trace,
)
from ..sle import (
    SleParams,
    sample,
)
from .oracles import ORACLES
from .verify import run_suite

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, frozen=True)
class Output:
    """Primary output of a command.

    Args:
        text: The document (CSV, JSON or SVG).
        status: Exit status; non-zero when a verification failed.

    """
    text: str
    status: int = 0


def tolerances(args: argparse.Namespace) -> Tolerances:
    """`Tolerances` with the overrides given on the command line."""
    changes = {
        f.name: getattr(args, f.name)
        for f in dataclasses.fields(Tolerances)
        if getattr(args, f.name, None) is not None
    }
    return Tolerances(**changes)


def canvas(args: argparse.Namespace) -> SvgCanvas:
    return SvgCanvas(args.width, args.height, args.margin)


def _capture(write: Callable[[Target], None]) -> str:
    buffer = io.StringIO()
    write(buffer)
    return buffer.getvalue()


def _render(
    args: argparse.Namespace,
    csv: Callable[[Target], None],
    svg: Callable[[Target], None],
) -> Output:
    return Output(_capture(svg if args.format == "svg" else csv))


def _json(data: Any) -> Output:
    return Output(json.dumps(data, indent=2) + "\n")


def _optional(value: Any) -> Any:
    return _Unset if value is None else value


def _points(args: argparse.Namespace) -> list[complex]:
    """Points from ``--z`` flags and the ``--points`` CSV file."""
    points = list(args.z or [])
    if args.points is not None:
        table = np.loadtxt(
            args.points, delimiter=",", skiprows=1, usecols=(0, 1), ndmin=2
        )
        points.extend(complex(x, y) for x, y in table.tolist())
    if not points:
        raise ValueError("no points given (use --z or --points)")
    return points


# sle

def _sle_path(args: argparse.Namespace, geometry: Geometry):
    params = SleParams(
        args.kappa, T=args.t, dt=args.dt, seed=args.seed,
        geometry=geometry, scale=_optional(args.scale),
        rho=_optional(getattr(args, "rho", None)),
    )
    return sample(params)


def sle_trace(args: argparse.Namespace) -> Output:
    path = _sle_path(args, Geometry(args.geometry))
    curve = trace(path, tolerances(args))
    return _render(
        args, curve.to_csv, lambda t: curve.to_svg(t, canvas(args))
    )


def sle_hull(args: argparse.Namespace) -> Output:
    path = _sle_path(args, Geometry(args.geometry))
    points = _points(args)
    state = forward_batch(
        path.times, path.values[None, :], points, path.final_time,
        path.geometry, path.scale, tolerances(args),
    )
    rows = []
    for z, h, tau in zip(points, state.h[0].tolist(), state.tau[0].tolist()):
        if np.isfinite(tau):
            rows.append((z.real, z.imag, "swallowed", tau, "", ""))
        else:
            g = h + float(state.xi[0])
            rows.append((z.real, z.imag, "alive", "", g.real, g.imag))
    return Output(csv_text(
        ("re", "im", "status", "tau", "g_re", "g_im"), rows
    ))


def sle_classify(args: argparse.Namespace) -> Output:
    path = _sle_path(args, Geometry.dipolar)
    tol = tolerances(args)
    rows = []
    for z in _points(args):
        outcome = classify_dipolar_outcome(path, z, args.t, tol)
        rows.append((z.real, z.imag, DipolarOutcome(outcome).value))
    return Output(csv_text(("re", "im", "outcome"), rows))


# lattice

def lattice_perc(args: argparse.Namespace) -> Output:
    domain = HexDomain.strip(args.cols, args.rows)
    path = percolation_interface(domain, args.seed)
    return _render(
        args, path.to_csv,
        lambda t: path.to_svg(t, domain, canvas(args)),
    )


def lattice_navigator(args: argparse.Namespace) -> Output:
    domain = HexDomain.strip(args.cols, args.rows)
    path = navigator_interface(
        domain, args.seed, NavigatorVariant(args.variant)
    )
    return _render(
        args, path.to_csv,
        lambda t: path.to_svg(t, domain, canvas(args)),
    )


def _walk_svg(args: argparse.Namespace, sites: np.ndarray) -> str:
    return canvas(args).polyline(sites[:, 0] + 1j * sites[:, 1])


def lattice_lerw(args: argparse.Namespace) -> Output:
    mode = WalkMode(args.mode)
    if mode is WalkMode.bessel3:
        walk = lerw_halfplane(args.altitude, args.seed)
    elif mode is WalkMode.reflecting:
        walk = lerw_reflecting(args.steps, args.seed)
    else:
        walk = lerw_domain(
            SquareDomain.rectangle(args.cols, args.rows), args.seed
        )
    return _render(
        args, walk.to_csv,
        lambda t: t.write(_walk_svg(args, walk.sites)),
    )


def lattice_saw(args: argparse.Namespace) -> Output:
    walk = straight_walk(args.length)
    for walk in pivot_chain(walk, args.steps, args.seed):
        pass
    logger.info("saw: end-to-end distance %.3f", walk.end_to_end)
    return _render(
        args, walk.to_csv,
        lambda t: t.write(_walk_svg(args, walk.sites)),
    )


# growth

def growth_lg_zn(args: argparse.Namespace) -> Output:
    R, beta = lg_zn_evolve(args.n, args.rc, args.t, tolerances(args))
    return _json({"n": args.n, "t": args.t, "R": R, "beta": beta})


def growth_lg_evolve(args: argparse.Namespace) -> Output:
    if args.state is not None:
        with open(args.state, encoding="utf-8") as fp:
            start = LgPolyState.from_dict(json.load(fp))
    else:
        start = lg_zn_state(args.n, args.radius, args.beta, args.t0)
    states = lg_evolve(start, args.t_end, args.dt, tolerances(args))
    return _json([s.serialize() for s in states])


def growth_hl(args: argparse.Namespace) -> Output:
    cluster = hl_grow(
        HlCluster(alpha=args.alpha, lambda0=args.lambda0),
        args.steps, args.seed,
    )
    return _render(
        args, cluster.to_csv,
        lambda t: cluster.to_svg(t, args.boundary_points, canvas(args)),
    )


def growth_dla(args: argparse.Namespace) -> Output:
    cluster = lattice_dla(args.particles, args.seed)
    return _render(
        args, cluster.to_csv, lambda t: cluster.to_svg(t, canvas(args))
    )


# oracle

def oracle(args: argparse.Namespace) -> Output:
    name = args.path[-1]
    entry = ORACLES[name]
    kwargs = {p.dest: getattr(args, p.dest) for p in entry.params}
    return Output(entry.evaluate(name, kwargs).to_json() + "\n")


# estimate

def estimate_dim(args: argparse.Namespace) -> Output:
    if args.model == "sle":
        report = sle_trace_dimension(
            args.kappa, args.samples, args.seed, T=args.t, dt=args.dt,
            threads=args.threads, tol=tolerances(args),
        )
    elif args.model == "percolation":
        report = interface_fit(
            args.sizes, args.samples, args.seed, threads=args.threads
        )
    elif args.model == "navigator":
        report = interface_fit(
            args.sizes, args.samples, args.seed,
            NavigatorVariant(args.variant), args.threads,
        )
    else:
        report = lerw_fit(
            args.sizes, args.samples, args.seed, SizeProxy(args.proxy),
            reflecting=args.model == "lerw-reflecting",
            threads=args.threads,
        )
    return Output(report.to_json() + "\n")


def _compared(estimate, expected: float) -> dict[str, Any]:
    return {
        "estimate": estimate.serialize(),
        "expected": expected,
        "within_3_sigma": estimate.within(expected),
    }


def estimate_crossing(args: argparse.Namespace) -> Output:
    est = triangle_crossing_estimate(
        args.side, args.x, args.samples, args.seed, args.threads
    )
    return _json(_compared(est, cardy_triangle(args.x)))


def estimate_hitting(args: argparse.Namespace) -> Output:
    est = hitting_estimate(
        args.x, args.X, args.kappa, args.paths, args.seed,
        rel_step=args.rel_step, threads=args.threads,
    )
    return _json(_compared(est, hitting_prob(args.x, args.X, args.kappa)))


def estimate_leftpass(args: argparse.Namespace) -> Output:
    results = left_passage_estimate(
        _points(args), args.kappa, args.paths, args.seed, T=args.t,
        dt=args.dt, threads=args.threads,
        tol=tolerances(args),
    )
    out = []
    for r in results:
        row = {
            "z": [r.z.real, r.z.imag],
            "left": r.left.serialize(),
            "inside": r.inside.serialize(),
            "right": r.right.serialize(),
            "undecided": r.undecided,
        }
        if args.kappa >= 4:
            row["expected"] = {
                "left": dipolar_left_prob(r.z, args.kappa),
                "inside": dipolar_in_prob(r.z, args.kappa),
                "right": dipolar_right_prob(r.z, args.kappa),
            }
        out.append(row)
    return _json(out)


# verify

def verify(args: argparse.Namespace) -> Output:
    report = run_suite(
        args.suite, args.seed, args.samples, args.threads, tolerances(args)
    )
    return Output(report.to_json() + "\n", 0 if report.passed else 1)

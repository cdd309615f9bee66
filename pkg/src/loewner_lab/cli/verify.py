"""Desk-scale verification suites run by ``loewner-lab verify``.

Each suite compares a simulation or a numerical routine with a known
value and reports every comparison as a `Check`.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
from typing import (
    Any,
    Union,
)
from collections import Counter
from collections.abc import Callable

import numpy as np

from .._internals import _Record
from ..config import (
    DEFAULT_TOLERANCES,
    Tolerances,
)
from ..enums import Arch
from ..estimators import (
    hitting_estimate,
    restriction_estimate,
    run_farm,
    triangle_crossing_estimate,
)
from ..formulas import (
    arch_partition,
    cardy_halfplane,
    cft_data,
    hitting_prob,
    loop_measure_bound,
    loop_measure_total,
    multifractal_f,
    multifractal_tau,
    restriction_prob_semidisc,
)
from ..growth import (
    lg_area,
    lg_conserved,
    lg_evolve,
    lg_zn_cusp_time,
    lg_zn_state,
    lg_zn_time_of_radius,
)
from ..lattice import (
    HexDomain,
    loop_erase,
    path_distribution,
    percolation_interface,
)
from ..loewner import (
    DrivingPath,
    closing_arc,
    forward_map,
    time_grid,
    trace,
)
from ..rng import substream

logger = logging.getLogger(__name__)


class Check(_Record):
    """One comparison.

    Args:
        name: What was compared.
        observed: The computed value.
        expected: The reference value.
        tolerance: Allowed absolute deviation.
        passed: Whether ``|observed - expected| <= tolerance``.

    """
    name: str
    observed: Any
    expected: Any
    tolerance: float
    passed: bool


class VerifyReport(_Record):
    suite: str
    passed: bool
    checks: list[Check]


def _check(
    name: str, observed: Any, expected: Any, tolerance: float
) -> Check:
    deviation = float(np.max(np.abs(
        np.asarray(observed) - np.asarray(expected)
    )))
    passed = bool(deviation <= tolerance)
    if not passed:
        logger.warning(
            "%s: observed %r, expected %r (tolerance %g)",
            name, observed, expected, tolerance,
        )
    return Check(name, observed, expected, float(tolerance), passed)


def _equal(name: str, observed: Any, expected: Any) -> Check:
    passed = observed == expected
    return Check(name, observed, expected, 0.0, passed)


Suite = Callable[[int, Union[int, None], Union[int, None], Tolerances],
                 list[Check]]


def suite_slit(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    times = time_grid(1.0, 1e-4)
    tip = trace(DrivingPath(times, np.zeros_like(times)), tol).tip
    return [_check("slit tip at t=1", tip, 2j, 1e-6)]


def suite_arc(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    d = closing_arc(1.0, 1e-4)
    checks = []
    for z in (2 + 1j, -1 + 0.5j, 0.5 + 2j, 3 + 0.1j, -2 + 2j):
        g = forward_map(d, z, tol=tol).value
        checks.append(_check(f"g({z})", g, z + 1 / (z - 1), 1e-3))
    return checks


def suite_loop_erase(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    checks = []
    for months, expected in (
        ("jfmamjjasond", "jasond"),
        ("dnosajjmamfj", "dnosamfj"),
        ("jasond", "jasond"),
    ):
        erased = "".join(loop_erase(months))
        checks.append(_equal(f"loop_erase({months})", erased, expected))
    return checks


def suite_percolation(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    samples = samples or 100_000
    d = HexDomain.from_cells({(0, 0), (1, 0), (0, 1)})
    exact = path_distribution(d)
    keys = run_farm(
        lambda _, rng: percolation_interface(d, rng).key,
        samples, seed, threads,
    )
    counts = Counter(keys)
    support = set(exact) | set(counts)
    tv = 0.5 * sum(
        abs(counts.get(k, 0) / samples - exact.get(k, 0.0)) for k in support
    )
    return [_check("total variation to the exact law", tv, 0.0, 0.01)]


def suite_restriction(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    est = restriction_estimate(
        1.0, 0.4, samples or 20_000, seed, threads=threads, tol=tol
    )
    expected = restriction_prob_semidisc(1.0, 0.4)
    return [_check(
        "avoids semi-disc (x=1, r=0.4)", est.p_hat, expected, 3 * est.sigma
    )]


def suite_hitting(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    est = hitting_estimate(
        1.0, 2.0, 6.0, samples or 5_000, seed, threads=threads
    )
    expected = hitting_prob(1.0, 2.0, 6.0)
    return [_check(
        "kappa=6 misses [1, 2]", est.p_hat, expected, 3 * est.sigma
    )]


def suite_cardy(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    checks = []
    for k, x in enumerate((0.2, 0.5, 0.8)):
        est = triangle_crossing_estimate(
            64, x, samples or 10_000, seed + k, threads
        )
        checks.append(_check(f"triangle crossing x={x}", est.p_hat, x, 0.02))
    for a, b, kappa in ((-1.0, 2.0, 6.0), (-0.3, 1.7, 5.0), (-3.0, 0.5, 7.0)):
        total = cardy_halfplane(a, b, kappa) + cardy_halfplane(-b, -a, kappa)
        checks.append(_check(
            f"half-plane symmetry ({a}, {b}, {kappa})", total, 1.0, 1e-10
        ))
    return checks


def suite_laplacian(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    t0 = lg_zn_time_of_radius(3, 0.5, 1.0)
    t1 = lg_zn_time_of_radius(3, 0.9, 1.0)
    start = lg_zn_state(3, 0.5, 0.5, t0)
    end = lg_evolve(start, t1, (t1 - t0) / 40, tol)[-1]
    i0 = lg_conserved(start, 2)
    drift = abs(lg_conserved(end, 2) - i0) / abs(i0)
    slope = (lg_area(end) - lg_area(start)) / (end.t - start.t)
    return [
        _check("relative drift of I_2 up to beta=0.9", drift, 0.0, 1e-6),
        _check("area slope", slope, 2 * math.pi, 1e-6),
        _check("beta at R=0.9", end.beta, 0.9, 1e-6),
        _check("n=3 cusp time", lg_zn_cusp_time(3, 1.0), 0.25, 1e-3),
    ]


def suite_loop_soup(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    rng = substream(seed)
    passed = 0
    count = samples or 100
    for _ in range(count):
        A = rng.random((4, 4))
        radius = float(np.max(np.abs(np.linalg.eigvals(A))))
        alpha = rng.uniform(0.05, 0.5) / radius
        lam = rng.uniform(0.1, 2.0)
        total = loop_measure_total(A, alpha, lam, 20)
        _, logdet = np.linalg.slogdet(np.eye(4) - alpha * A)
        bound = loop_measure_bound(A, alpha, lam, 20)
        error = abs(total + lam * logdet)
        passed += int(error <= bound + 1e-12)
    return [_check(
        "matrices within the remainder bound", passed, count, 0.0
    )]


def suite_oracles(
    seed: int, samples: Union[int, None], threads: Union[int, None],
    tol: Tolerances,
) -> list[Check]:
    checks = []
    for kappa in (2.0, 8 / 3, 3.0, 6.0):
        checks.append(_check(
            f"c({kappa}) = c({16 / kappa:g})",
            cft_data(kappa).c, cft_data(16 / kappa).c, 1e-12,
        ))
    for kappa in (2.0, 4.0, 6.0):
        h = 1e-5
        derivative = (
            multifractal_tau(1 + h, kappa) - multifractal_tau(1 - h, kappa)
        ) / (2 * h)
        checks.append(_check(f"tau'(1) at kappa={kappa}", derivative, 1.0,
                             1e-6))
        n = 2.0
        alpha = (
            multifractal_tau(n + h, kappa) - multifractal_tau(n - h, kappa)
        ) / (2 * h)
        checks.append(_check(
            f"Legendre point at kappa={kappa}",
            multifractal_f(alpha, kappa),
            n * alpha - multifractal_tau(n, kappa),
            1e-6,
        ))
    for x in (0.2, 0.5, 0.8):
        checks.append(_check(
            f"Z at kappa=4, x={x}",
            arch_partition(x, 4.0, Arch.I, tol),
            math.sqrt((1 - x) / x), 1e-8,
        ))
        checks.append(_check(
            f"Z at kappa=2, x={x}",
            arch_partition(x, 2.0, Arch.I, tol),
            (1 - x * x) / (x * x), 1e-8,
        ))
    return checks


SUITES: dict[str, Suite] = {
    "slit": suite_slit,
    "arc": suite_arc,
    "loop-erase": suite_loop_erase,
    "percolation": suite_percolation,
    "restriction": suite_restriction,
    "hitting": suite_hitting,
    "cardy": suite_cardy,
    "laplacian": suite_laplacian,
    "loop-soup": suite_loop_soup,
    "oracles": suite_oracles,
}


def run_suite(
    name: str,
    seed: int,
    samples: Union[int, None] = None,
    threads: Union[int, None] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> VerifyReport:
    """Run suite ``name``; ``samples`` overrides its Monte Carlo size."""
    logger.info("verify: running suite %s", name)
    checks = SUITES[name](seed, samples, threads, tol)
    return VerifyReport(name, all(c.passed for c in checks), checks)

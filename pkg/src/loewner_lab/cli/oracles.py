"""Named analytic formulas exposed by ``loewner-lab oracle``.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import dataclasses
from typing import (
    Any,
    Union,
)
from collections.abc import Callable

import numpy as np

from .._internals import _Record
from ..enums import Arch
from ..formulas import (
    arch_partition,
    arch_prob_I,
    cardy_halfplane,
    cardy_rectangle,
    cardy_triangle,
    cft_data,
    dipolar_exit_density,
    dipolar_in_prob,
    dipolar_left_prob,
    dipolar_right_prob,
    fk_ising_crossing,
    hitting_prob,
    ising_spin_crossing,
    loop_measure_bound,
    loop_measure_total,
    multifractal_f,
    multifractal_tau,
    restriction_prob_semidisc,
    zeta,
    zeta_tilde,
)


class OracleResult(_Record):
    """What ``oracle`` prints.

    Args:
        name: The formula name.
        value: Its value.
        method: How the value was computed.
        tolerance: Absolute accuracy of ``value``.

    """
    name: str
    value: Any
    method: str
    tolerance: float


def parse_matrix(text: str) -> np.ndarray:
    """``"a,b;c,d"`` -> 2x2 array."""
    rows = [r for r in text.split(";") if r.strip()]
    return np.array(
        [[float(v) for v in row.split(",")] for row in rows], dtype=float
    )


@dataclasses.dataclass(eq=False, frozen=True)
class Param:
    """A required ``--name`` flag of an oracle."""
    name: str
    type: Callable[[str], Any]
    help: str
    choices: Union[tuple[Any, ...], None] = None

    @property
    def dest(self) -> str:
        return self.name.replace("-", "_")


@dataclasses.dataclass(eq=False, frozen=True)
class Oracle:
    """A formula, its flags and its accuracy.

    ``tolerance`` is either a number or a function of the same arguments
    as ``fn``.

    """
    fn: Callable[..., Any]
    params: tuple[Param, ...]
    method: str
    tolerance: Union[float, Callable[..., float]]
    help: str

    def evaluate(self, name: str, kwargs: dict[str, Any]) -> OracleResult:
        value = self.fn(**kwargs)
        if callable(self.tolerance):
            tolerance = float(self.tolerance(**kwargs))
        else:
            tolerance = float(self.tolerance)
        return OracleResult(name, value, self.method, tolerance)


_X = Param("x", float, "boundary point or aspect parameter")
_KAPPA = Param("kappa", float, "SLE parameter κ")
_Z = Param("z", complex, "point of the strip, e.g. 1.5+2j")
_QUAD = "adaptive quadrature"


def _cft(kappa: float) -> dict[str, Any]:
    return cft_data(kappa).serialize()


def _loops(matrix: np.ndarray, alpha: float, lam: float, n_max: int):
    return loop_measure_total(matrix, alpha, lam, n_max)


def _loops_bound(matrix: np.ndarray, alpha: float, lam: float, n_max: int):
    return loop_measure_bound(matrix, alpha, lam, n_max)


def _arch_partition(x: float, kappa: float, which: str) -> float:
    return arch_partition(x, kappa, Arch(which))


ORACLES: dict[str, Oracle] = {
    "cft": Oracle(
        _cft, (_KAPPA,), "closed form", 0.0,
        "central charge, weights and dimension",
    ),
    "zeta": Oracle(
        zeta, (Param("n", int, "number of paths"),), "closed form", 0.0,
        "whole-plane Brownian intersection exponent",
    ),
    "zeta-tilde": Oracle(
        zeta_tilde, (Param("n", int, "number of paths"),), "closed form",
        0.0, "half-plane Brownian intersection exponent",
    ),
    "hitting": Oracle(
        hitting_prob,
        (
            _X,
            Param("X", float, "right end of the interval"),
            _KAPPA,
        ),
        _QUAD, 1e-10,
        "probability that chordal SLE misses [x, X]",
    ),
    "cardy-halfplane": Oracle(
        cardy_halfplane,
        (
            Param("a", float, "left boundary point (negative)"),
            Param("b", float, "right boundary point (positive)"),
            _KAPPA,
        ),
        _QUAD, 1e-10, "half-plane crossing probability",
    ),
    "cardy-rectangle": Oracle(
        cardy_rectangle,
        (Param("r", float, "height/width ratio"),),
        "elliptic parameter root and hypergeometric series", 1e-12,
        "rectangle crossing probability",
    ),
    "cardy-triangle": Oracle(
        cardy_triangle, (_X,), "closed form", 0.0,
        "equilateral triangle crossing probability",
    ),
    "restriction": Oracle(
        restriction_prob_semidisc,
        (_X, Param("r", float, "semi-disc radius")),
        "closed form", 1e-15,
        "probability that SLE(8/3) avoids a semi-disc",
    ),
    "multifractal-tau": Oracle(
        multifractal_tau, (Param("n", float, "moment order"), _KAPPA),
        "closed form", 0.0, "harmonic measure moment exponent",
    ),
    "multifractal-f": Oracle(
        multifractal_f,
        (Param("alpha", float, "local singularity (> 1/2)"), _KAPPA),
        "closed form", 0.0, "harmonic measure multifractal spectrum",
    ),
    "dipolar-left": Oracle(
        dipolar_left_prob, (_Z, _KAPPA), _QUAD, 1e-8,
        "dipolar SLE left-passage probability",
    ),
    "dipolar-in": Oracle(
        dipolar_in_prob, (_Z, _KAPPA), _QUAD, 1e-8,
        "dipolar SLE swallowing probability",
    ),
    "dipolar-right": Oracle(
        dipolar_right_prob, (_Z, _KAPPA), _QUAD, 1e-8,
        "dipolar SLE right-passage probability",
    ),
    "dipolar-exit": Oracle(
        dipolar_exit_density, (_X, _KAPPA), _QUAD, 1e-10,
        "density of the dipolar SLE end point",
    ),
    "arch-partition": Oracle(
        _arch_partition,
        (_X, _KAPPA, Param("which", str, "arch pairing", ("I", "II"))),
        "hypergeometric series and ODE continuation", 1e-8,
        "pure four-point partition function",
    ),
    "arch-prob": Oracle(
        arch_prob_I,
        (
            _X, _KAPPA,
            Param("p-I", float, "weight of pairing I"),
            Param("p-II", float, "weight of pairing II"),
        ),
        "hypergeometric series and ODE continuation", 1e-8,
        "probability of arch pairing I",
    ),
    "ising-spin": Oracle(
        ising_spin_crossing, (_X,), _QUAD, 1e-10,
        "spin-Ising crossing probability",
    ),
    "fk-ising": Oracle(
        fk_ising_crossing, (_X,), "closed form", 0.0,
        "FK-Ising crossing probability",
    ),
    "loop-total": Oracle(
        _loops,
        (
            Param("matrix", parse_matrix, "weights as 'a,b;c,d'"),
            Param("alpha", float, "fugacity per step"),
            Param("lam", float, "soup intensity"),
            Param("n-max", int, "longest loop kept"),
        ),
        "truncated trace series", _loops_bound,
        "total mass of the loop measure",
    ),
}

"""Hastings-Levitov clusters: iterated conformal bump maps.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import math
import logging
import dataclasses
from typing import Any

import numpy as np

from .._export import (
    SvgCanvas,
    Target,
    write_csv,
    write_text,
)
from ..errors import DerivativeUnderflow
from ..rng import (
    Seed,
    as_generator,
)

logger = logging.getLogger(__name__)

MAX_LAMBDA = math.pi / 4
LOG_UNDERFLOW = math.log(1e-300)


def _root(w: np.ndarray, lam: float) -> np.ndarray:
    """``√(w² - 2w cos 2λ + 1)`` continuous on ``|w| > 1``, ``~ w`` at ∞."""
    a = np.exp(2j * lam)
    return w * np.sqrt(1 - a / w) * np.sqrt(1 - np.conj(a) / w)


def bump(w: Any, lam: float) -> np.ndarray:
    """The bump map ``f_λ(w) = (2cos λ)^-1 [w + 1 + √(w² - 2w cos 2λ + 1)]``.

    Maps the exterior of the unit disk onto the exterior of the disk with
    a slit-like bump of tip ``sec λ + tan λ`` at 1.

    """
    w = np.asarray(w, dtype=complex)
    return (w + 1 + _root(w, lam)) / (2 * math.cos(lam))


def bump_derivative(w: Any, lam: float) -> np.ndarray:
    w = np.asarray(w, dtype=complex)
    return (1 + (w - math.cos(2 * lam)) / _root(w, lam)) / (2 * math.cos(lam))


@dataclasses.dataclass(eq=False, frozen=True)
class HlCluster:
    """A composition ``F = f_1 ∘ f_2 ∘ ... ∘ f_n`` of rotated bumps.

    Args:
        bumps: Array of ``(λ_k, θ_k)`` rows, oldest first.
        alpha: Bump-size exponent in ``[0, 2]``; 0 is the uniform-size
            model, 2 the DLA-like one.
        lambda0: Base bump size.

    """
    bumps: np.ndarray = dataclasses.field(
        default_factory=lambda: np.empty((0, 2))
    )
    alpha: float = 2.0
    lambda0: float = 0.1

    def __post_init__(self) -> None:
        bumps = np.array(self.bumps, dtype=float).reshape(-1, 2)
        bumps.setflags(write=False)
        object.__setattr__(self, "bumps", bumps)
        if not 0 <= self.alpha <= 2:
            raise ValueError("alpha must lie in [0, 2]")
        if not 0 < self.lambda0 <= MAX_LAMBDA:
            raise ValueError("lambda0 must lie in (0, π/4]")
        if np.any(bumps[:, 0] <= 0):
            raise ValueError("bump sizes must be positive")
        if np.any((bumps[:, 1] < 0) | (bumps[:, 1] >= 2 * math.pi)):
            raise ValueError("bump angles must lie in [0, 2π)")

    def __len__(self) -> int:
        return self.bumps.shape[0]

    def to_csv(self, target: Target) -> None:
        write_csv(target, ("k", "lambda", "theta"), (
            (k, lam, theta)
            for k, (lam, theta) in enumerate(self.bumps.tolist(), 1)
        ))

    def to_svg(
        self,
        target: Target,
        m_points: int = 4096,
        canvas: SvgCanvas = SvgCanvas(),
    ) -> None:
        boundary = hl_boundary(self, m_points)
        write_text(target, canvas.polyline(np.append(boundary, boundary[0])))


def _compose(
    c: HlCluster, w: np.ndarray, upto: int
) -> tuple[np.ndarray, np.ndarray]:
    """``F_upto(w)`` and ``log |F_upto'(w)|``."""
    z = np.array(w, dtype=complex)
    log_derivative = np.zeros(z.shape)
    for lam, theta in c.bumps[:upto][::-1].tolist():
        rot = complex(math.cos(theta), math.sin(theta))
        u = z / rot
        with np.errstate(divide="ignore"):
            log_derivative += np.log(np.abs(bump_derivative(u, lam)))
        z = rot * bump(u, lam)
    return z, log_derivative


def hl_map(c: HlCluster, w: Any) -> np.ndarray:
    """Evaluate the composed map at points outside the unit disk."""
    return _compose(c, np.asarray(w, dtype=complex), len(c))[0]


def hl_derivative(c: HlCluster, w: Any) -> np.ndarray:
    """``|F'(w)|`` accumulated by the chain rule."""
    return np.exp(_compose(c, np.asarray(w, dtype=complex), len(c))[1])


def hl_capacity(c: HlCluster) -> float:
    """Conformal radius ``Π sec λ_k`` (the coefficient of ``w`` at ∞)."""
    return float(np.exp(-np.sum(np.log(np.cos(c.bumps[:, 0])))))


def hl_boundary(c: HlCluster, m_points: int) -> np.ndarray:
    """Images of ``m_points`` equally spaced unit-circle points."""
    if m_points < 1:
        raise ValueError("m_points must be positive")
    w = np.exp(2j * np.pi * np.arange(m_points) / m_points)
    return hl_map(c, w)


def hl_grow(c: HlCluster, steps: int, seed: Seed) -> HlCluster:
    """Glue ``steps`` further bumps at uniform angles.

    The new size is ``λ_0 |F'(e^{iθ})|^(-α/2)``, evaluated through the
    current composition and clipped at π/4.

    Raises:
        DerivativeUnderflow: ``|F'| < 1e-300`` at the chosen angle.

    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = as_generator(seed)
    thetas = rng.uniform(0.0, 2 * math.pi, size=steps)
    bumps = list(map(tuple, c.bumps.tolist()))
    grown = c
    for theta in thetas.tolist():
        if c.alpha == 0:
            lam = c.lambda0
        else:
            _, log_derivative = _compose(
                grown, np.array([complex(math.cos(theta), math.sin(theta))]),
                len(grown),
            )
            log_d = float(log_derivative[0])
            if not log_d >= LOG_UNDERFLOW:
                raise DerivativeUnderflow(theta, math.exp(log_d))
            lam = c.lambda0 * math.exp(-c.alpha / 2 * log_d)
            if lam > MAX_LAMBDA:
                logger.warning(
                    "clipping bump size %.3g at theta=%.6g", lam, theta
                )
                lam = MAX_LAMBDA
        bumps.append((lam, theta))
        grown = dataclasses.replace(grown, bumps=np.array(bumps))
    logger.debug("grew %d bumps, capacity %.6g", steps, hl_capacity(grown))
    return grown

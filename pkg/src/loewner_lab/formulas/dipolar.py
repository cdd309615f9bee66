"""Left-passage, hull and exit laws for dipolar SLE in the strip
``0 < Im z < π``.

All three probabilities come from the analytic function
``F(z) = ∫_{-∞}^z (sinh u/2)^{-4/κ} du``, integrated along the
horizontal line through ``z``.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import cmath
import math

from scipy.integrate import quad

from ..errors import DomainError

QUAD_OPTIONS = dict(epsabs=1e-13, epsrel=1e-11, limit=400)
_LOG2 = math.log(2)


def _check_strip(z: complex) -> None:
    if not 0 <= z.imag <= math.pi:
        raise DomainError("z must lie in the strip 0 <= Im z <= π")


def _log_cosh_half(y: float) -> float:
    """``log cosh(y/2)`` without overflow."""
    y = abs(y)
    return y / 2 + math.log1p(math.exp(-y)) - _LOG2


def _log_sinh_half(y: float) -> float:
    """``log sinh(y/2)`` for ``y > 0`` without overflow."""
    return y / 2 + math.log1p(-math.exp(-y)) - _LOG2


def _cosh_power(y: float, power: float) -> float:
    return math.exp(power * _log_cosh_half(y))


def _sinh_power(y: float, power: float) -> float:
    return math.exp(power * _log_sinh_half(y))


def _log_sinh(w: complex) -> complex:
    """Principal ``log sinh w`` for any ``w`` without overflow."""
    if w.real >= 0:
        value = w + cmath.log(1 - cmath.exp(-2 * w)) - _LOG2
    else:
        value = -w + 1j * math.pi + cmath.log(1 - cmath.exp(2 * w)) - _LOG2
    return complex(value.real, math.remainder(value.imag, 2 * math.pi))


def _line_integral(x: float, y: float, kappa: float) -> complex:
    """``∫_{-∞}^x (sinh((s + iy)/2))^{-4/κ} ds`` for ``0 < y <= π``."""
    power = -4 / kappa

    def integrand(s: float) -> complex:
        return cmath.exp(power * _log_sinh(complex(s, y) / 2))

    cut = min(x, -1.0)
    pieces = [(-math.inf, cut)]
    if x > cut:
        pieces.append((cut, x))
    total = 0j
    for lo, hi in pieces:
        points = [0.0] if lo < 0 < hi else None
        re, _ = quad(lambda s: integrand(s).real, lo, hi, points=points,
                     **QUAD_OPTIONS)
        im, _ = quad(lambda s: integrand(s).imag, lo, hi, points=points,
                     **QUAD_OPTIONS)
        total += complex(re, im)
    return total


def _tail(x: float, kappa: float) -> float:
    """``∫_x^∞ (sinh y/2)^{-4/κ} dy`` for ``x >= 0``."""
    power = -4 / kappa
    if x > 0:
        value, _ = quad(_sinh_power, x, math.inf, args=(power,),
                        **QUAD_OPTIONS)
        return value
    # y = v^p with p = κ/(κ-4) tames the singularity at 0
    p = kappa / (kappa - 4)

    def head(v: float) -> float:
        y = v ** p
        if y == 0:
            return p * 2 ** (4 / kappa)
        return p * v ** (p - 1) * _sinh_power(y, power)

    value, _ = quad(head, 0, 1, **QUAD_OPTIONS)
    return value + _tail(1.0, kappa)


def hull_integral_j(kappa: float) -> float:
    """``J = ∫_0^∞ (sinh y/2)^{-4/κ} dy`` for ``κ > 4``."""
    if not kappa > 4:
        raise DomainError("J diverges for kappa <= 4")
    return _tail(0.0, kappa)


def exit_integral_i(kappa: float) -> float:
    """``I = ∫ (cosh y/2)^{-4/κ} dy`` over the real line."""
    value, _ = quad(_cosh_power, 0, math.inf, args=(-4 / kappa,),
                    **QUAD_OPTIONS)
    return 2 * value


def dipolar_f(z: complex, kappa: float) -> complex:
    """``F(z)`` on the closed strip (``κ > 4`` on the lower boundary)."""
    z = complex(z)
    _check_strip(z)
    if z.imag > 0:
        return _line_integral(z.real, z.imag, kappa)
    if not kappa > 4:
        raise DomainError("F is unbounded on the real axis for kappa <= 4")
    phase = cmath.exp(-4j * math.pi / kappa)
    if z.real <= 0:
        return phase * _tail(-z.real, kappa)
    return phase * hull_integral_j(kappa) + (
        hull_integral_j(kappa) - _tail(z.real, kappa)
    )


def dipolar_exit_density(x: float, kappa: float) -> float:
    """Density of the trace's endpoint on the upper boundary at ``iπ + x``,
    ``(cosh x/2)^{-4/κ} / I``. Valid for every κ.

    """
    if not kappa > 0:
        raise DomainError("kappa must be positive")
    return _cosh_power(x, -4 / kappa) / exit_integral_i(kappa)


def _upper_left_prob(x: float, kappa: float) -> float:
    power = -4 / kappa
    tail, _ = quad(_cosh_power, abs(x), math.inf, args=(power,),
                   **QUAD_OPTIONS)
    share = tail / exit_integral_i(kappa)
    return share if x >= 0 else 1 - share


def dipolar_left_prob_k4(z: complex) -> float:
    """``κ = 4`` closed form ``(1/π) Im log tanh(z/4)``."""
    z = complex(z)
    _check_strip(z)
    if z.imag == math.pi:
        # 1 - (2/π) atan(e^{x/2}), written to avoid overflow
        share = 2 / math.pi * math.atan(math.exp(-abs(z.real) / 2))
        return share if z.real >= 0 else 1 - share
    if z.imag == 0:
        return 1.0 if z.real < 0 else 0.0
    return cmath.log(cmath.tanh(z / 4)).imag / math.pi


def dipolar_left_prob(z: complex, kappa: float) -> float:
    """Probability that ``z`` ends up to the left of the trace, unswallowed.

    ``1 - Im F(z) / Im F(+∞)`` for ``κ > 4``; the closed form for
    ``κ = 4``. On the upper boundary the exit law is used, which holds
    for every κ.

    """
    z = complex(z)
    _check_strip(z)
    if z.imag == math.pi:
        return _upper_left_prob(z.real, kappa)
    if kappa == 4:
        return dipolar_left_prob_k4(z)
    if not kappa > 4:
        raise DomainError("left-passage law is not harmonic for kappa < 4")
    top = -math.sin(4 * math.pi / kappa) * hull_integral_j(kappa)
    return min(max(1 - dipolar_f(z, kappa).imag / top, 0.0), 1.0)


def dipolar_in_prob(z: complex, kappa: float) -> float:
    """Probability that ``z`` is swallowed,
    ``Im[e^{2πi/κ} F(z)] / (-sin(2π/κ) J)``; zero for ``κ <= 4``.

    """
    z = complex(z)
    _check_strip(z)
    if kappa < 4:
        raise DomainError("P_in requires kappa >= 4")
    if kappa == 4 or z.imag == math.pi:
        return 0.0
    rotated = cmath.exp(2j * math.pi / kappa) * dipolar_f(z, kappa)
    norm = -math.sin(2 * math.pi / kappa) * hull_integral_j(kappa)
    return min(max(rotated.imag / norm, 0.0), 1.0)


def dipolar_right_prob(z: complex, kappa: float) -> float:
    """``1 - P_l - P_in``."""
    in_prob = 0.0 if kappa <= 4 else dipolar_in_prob(z, kappa)
    return min(max(1 - dipolar_left_prob(z, kappa) - in_prob, 0.0), 1.0)

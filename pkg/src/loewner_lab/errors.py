"""Exceptions raised by the numerical routines.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


class LoewnerLabError(Exception):
    """Base class of every error raised by this package."""


class NumericalFailure(LoewnerLabError):
    """A computation could not be completed to the requested tolerance.

    The command line maps these to exit code 1.

    """


class StepFailure(NumericalFailure):
    """The adaptive integrator could not meet its tolerance.

    Args:
        t: The capacity time at which integration stopped.
        message: The integrator's own message.

    """
    def __init__(self, t: float, message: str = "") -> None:
        self.t = t
        super().__init__(f"integration failed at t={t:.6g}: {message}")


class Swallowed(NumericalFailure):
    """A point was swallowed by the hull before the requested time.

    Args:
        z: The queried point.
        tau: Its swallowing time.

    """
    def __init__(self, z: complex, tau: float) -> None:
        self.z = z
        self.tau = tau
        super().__init__(f"point {z!r} swallowed at t={tau:.6g}")


class CuspReached(NumericalFailure):
    """A Laplacian growth evolution reached (or came too close to) a cusp.

    Args:
        t: The time at which the guard fired.
        beta: The cusp indicator when the guard fired (``min |f'|`` on the
            unit circle for general states, ``beta`` for Z_n states).

    """
    def __init__(self, t: float, beta: float) -> None:
        self.t = t
        self.beta = beta
        super().__init__(f"cusp guard triggered at t={t:.6g} ({beta:.6g})")


class DerivativeUnderflow(NumericalFailure):
    """The composed Hastings-Levitov derivative underflowed at a site."""
    def __init__(self, theta: float, value: float) -> None:
        self.theta = theta
        self.value = value
        super().__init__(
            f"|F'| = {value:.3g} at theta={theta:.6g} (dead growth site)"
        )


class DivergentSeries(NumericalFailure):
    """A loop series was requested with spectral radius >= 1."""
    def __init__(self, radius: float) -> None:
        self.radius = radius
        super().__init__(f"spectral radius {radius:.6g} >= 1")


class DegenerateFit(NumericalFailure):
    """A log-log fit was requested on too few or identical sizes."""


class Undecided(NumericalFailure):
    """A dipolar classification did not settle before the time horizon."""
    def __init__(self, z: complex, value: complex) -> None:
        self.z = z
        self.value = value
        super().__init__(
            f"point {z!r} undecided (h_T = {value:.6g}) at the time horizon"
        )


class DomainError(LoewnerLabError, ValueError):
    """A formula was evaluated outside its domain of validity."""

"""Enumerations shared across the package.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import enum


class Geometry(enum.StrEnum):
    """Reference domain of a Loewner evolution."""
    chordal = "chordal"
    radial = "radial"
    dipolar = "dipolar"

    @property
    def default_scale(self) -> float:
        """Circumference factor Λ (radial) or width factor Δ (dipolar)."""
        return {"chordal": 1.0, "radial": 2.0, "dipolar": 1.0}[self.value]


class Color(enum.IntEnum):
    undecided = 0
    black = 1
    white = 2

    @property
    def opposite(self) -> "Color":
        if self is Color.undecided:
            return self
        return Color.white if self is Color.black else Color.black


class NavigatorVariant(enum.StrEnum):
    harmonic = "harmonic"
    anti = "anti"
    percolation_nav = "percolation_nav"
    boundary_harmonic = "boundary_harmonic"


class WalkMode(enum.StrEnum):
    reflecting = "reflecting"
    annihilating = "annihilating"
    bessel3 = "bessel3"


class SizeProxy(enum.StrEnum):
    end_to_end = "end_to_end"
    max_altitude = "max_altitude"


class DipolarOutcome(enum.StrEnum):
    left = "left"
    right = "right"
    inside = "inside"


class Arch(enum.StrEnum):
    """Pairing of the four boundary points of a two-curve configuration."""
    I = "I"
    II = "II"

"""Combinatorial effect of the standard Cremona transformation on profiles.

Two base-point modes are supported:

* GENERIC_POINTS: three non-collinear base points away from all curves
  and their singular points.  Degrees double and three new points appear
  through which every member passes.  For a line configuration the image
  is a transversal conic configuration and the t-vector bookkeeping is
  exact; for members of degree >= 2 the three new points are not
  transversal (every member acquires a d-fold point there), the image
  leaves the t-vector formalism, and the operation aborts loudly.

* COMMON_POINTS: the three k-fold points of a conic configuration with
  t_k = 3 are used as base points; every conic becomes a line and the
  three common points disappear.

The H-constant transformation law h -> s/(s+3) * h is exposed separately
so it can be iterated on abstract (h, s) data of any curve degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .profiles import (
    ConfigurationProfile,
    CurveKind,
    HarbourneError,
    LINES,
    plane_curves,
    require_valid,
    validate,
)

GENERICITY_NOTE = (
    "assumes the three base points are generic: non-collinear, away from "
    "the singular locus and from all member curves"
)


class CremonaModeError(HarbourneError):
    """Mode preconditions on the input profile are violated."""


class CremonaConsistencyError(HarbourneError):
    """The transformed profile cannot satisfy its incidence identity."""


class CremonaMode(Enum):
    GENERIC_POINTS = "generic"
    COMMON_POINTS = "common3"


@dataclass(frozen=True)
class CremonaSpec:
    mode: CremonaMode


def cremona_profile(
    profile: ConfigurationProfile, spec: CremonaSpec
) -> ConfigurationProfile:
    """Profile of the Cremona-transformed configuration."""
    if spec.mode is CremonaMode.GENERIC_POINTS:
        return _generic_points(profile)
    return _common_points(profile)


def _generic_points(profile: ConfigurationProfile) -> ConfigurationProfile:
    if not profile.curve_class.is_plane:
        raise CremonaModeError(
            "generic-points mode needs a plane configuration, got "
            + profile.curve_class.label()
        )
    require_valid(profile)
    d = profile.curve_class.member_degree
    t = dict(profile.t)
    t[profile.k] = t.get(profile.k, 0) + 3
    image = ConfigurationProfile(plane_curves(2 * d), profile.k, t)
    report = validate(image)
    if not report.ok:
        raise CremonaConsistencyError(
            f"image profile fails its incidence identity "
            f"({'; '.join(v.message for v in report.violations)}): members of "
            f"degree {d} >= 2 acquire a {d}-fold point at each of the three "
            "new common points, which a transversal t-vector cannot record"
        )
    return image


def _common_points(profile: ConfigurationProfile) -> ConfigurationProfile:
    if profile.curve_class.kind is not CurveKind.CONIC_P2:
        raise CremonaModeError(
            "common-points mode needs a conic configuration, got "
            + profile.curve_class.label()
        )
    if profile.t_of(profile.k) != 3:
        raise CremonaModeError(
            f"common-points mode needs exactly three k-fold points, got "
            f"t_{profile.k} = {profile.t_of(profile.k)}"
        )
    require_valid(profile)
    t = {r: c for r, c in profile.t.items() if r != profile.k}
    image = ConfigurationProfile(LINES, profile.k, t)
    report = validate(image)
    if not report.ok:  # forced by the conic identity; a failure is a bug
        raise AssertionError(
            f"common-points image of {profile} fails its identity: "
            + "; ".join(v.message for v in report.violations)
        )
    return image


def h_transformation_law(h_before: Fraction, s_before: int) -> Fraction:
    """H-constant after a generic-points Cremona: s/(s+3) * h."""
    if s_before < 1:
        raise ValueError("s_before must be >= 1")
    return Fraction(s_before, s_before + 3) * h_before


@dataclass(frozen=True)
class LawStep:
    h: Fraction
    s: int
    degree_multiplier: int


def iterate_law(h0: Fraction, s0: int, n: int) -> tuple[LawStep, ...]:
    """Iterate the transformation law n times on abstract (h, s) data.

    Each step multiplies h by s/(s+3), increments s by 3 and doubles the
    configuration degree; the product telescopes to h0 * s0/(s0 + 3n).
    Returns the full trajectory including the starting state.
    """
    if s0 < 1:
        raise ValueError("s0 must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    steps = [LawStep(h=Fraction(h0), s=s0, degree_multiplier=1)]
    h, s, mult = Fraction(h0), s0, 1
    for _ in range(n):
        h = h_transformation_law(h, s)
        s += 3
        mult *= 2
        steps.append(LawStep(h=h, s=s, degree_multiplier=mult))
    return tuple(steps)

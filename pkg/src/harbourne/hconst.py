"""Exact local Harbourne constants at the singular locus of a configuration.

Blowing up the s = f0 singular points of a configuration divisor D and
subtracting multiplicities gives the strict-transform self-intersection
D^2 - sum m_i^2; dividing by s yields the local H-constant.  For a
validating profile the incidence identity collapses the numerator of a
degree-d plane configuration to d^2*k - f1 (2k - f1 on the quadric),
which is asserted against the direct f2 computation on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .profiles import (
    ConfigurationProfile,
    HarbourneError,
    MomentSet,
    moments,
)


class NoSingularPointsError(HarbourneError):
    """The configuration is smooth: there is nothing to blow up."""


@dataclass(frozen=True)
class HReport:
    """Exact H-constant analysis of one profile.

    h * s == numerator holds exactly; no value is ever rounded.
    """

    s: int
    numerator: int
    h: Fraction
    degree_total: int


def format_decimal(value: Fraction, places: int) -> str:
    """Fixed-point decimal string of an exact rational (display only)."""
    scaled = round(value * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def strict_transform_self_intersection(
    degree_total: int, multiplicities: Sequence[int]
) -> int:
    """D^2 - sum m_i^2 for a plane divisor of total degree D."""
    if degree_total < 1:
        raise ValueError("degree_total must be >= 1")
    if any(m < 2 for m in multiplicities):
        raise ValueError("blown-up multiplicities must all be >= 2")
    return degree_total * degree_total - sum(m * m for m in multiplicities)


def local_h(profile: ConfigurationProfile) -> HReport:
    """Local H-constant of a validating profile at its singular points."""
    if not profile.t:
        raise NoSingularPointsError("no singular points: nothing is blown up")
    ms = moments(profile)
    return _report_from_moments(profile, ms)


def _report_from_moments(profile: ConfigurationProfile, ms: MomentSet) -> HReport:
    cls = profile.curve_class
    numerator = cls.self_intersection(profile.k) - ms.f2
    # Reduced form: the incidence identity forces equality on validating
    # profiles, so a mismatch is an internal bug.
    reduced = cls.pairwise_intersection * profile.k - ms.f1
    if numerator != reduced:
        raise AssertionError(
            f"moment reduction failed: {numerator} != {reduced} for {profile}"
        )
    s = ms.f0
    return HReport(
        s=s,
        numerator=numerator,
        h=Fraction(numerator, s),
        degree_total=cls.member_degree * profile.k,
    )

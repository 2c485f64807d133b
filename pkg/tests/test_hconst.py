from fractions import Fraction

import pytest
from hypothesis import given

from conftest import conic_profiles, feasible_profiles
from harbourne.hconst import (
    NoSingularPointsError,
    format_decimal,
    local_h,
    strict_transform_self_intersection,
)
from harbourne.profiles import (
    CONICS,
    ConfigurationProfile,
    LINES,
    ONE_ONE,
    ProfileInvalidError,
    moments,
)


class TestStrictTransform:
    def test_twelve_double_points(self):
        assert strict_transform_self_intersection(6, [2] * 12) == -12

    def test_no_blowup(self):
        assert strict_transform_self_intersection(21, []) == 441

    def test_mixed_multiplicities(self):
        mults = [3] * 28 + [4] * 21 + [21] * 3
        assert strict_transform_self_intersection(42, mults) == -147

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            strict_transform_self_intersection(0, [2])

    def test_rejects_multiplicity_one(self):
        with pytest.raises(ValueError):
            strict_transform_self_intersection(5, [2, 1])


class TestLocalH:
    def test_klein_lines(self):
        report = local_h(ConfigurationProfile(LINES, 21, {3: 28, 4: 21}))
        assert report.numerator == -147
        assert report.s == 49
        assert report.h == Fraction(-3)
        assert report.degree_total == 21

    def test_cremona_wiman_conics(self):
        profile = ConfigurationProfile(CONICS, 45, {3: 120, 4: 45, 5: 36, 45: 3})
        report = local_h(profile)
        assert report.numerator == -675
        assert report.s == 204
        assert report.h == Fraction(-225, 68)
        assert format_decimal(report.h, 2) == "-3.31"

    def test_conic_pencil(self):
        report = local_h(ConfigurationProfile(CONICS, 5, {5: 4}))
        assert report.numerator == 0
        assert report.h == 0
        assert report.degree_total == 10

    def test_twelve_double_points(self):
        # brute force: D = 6, twelve blown-up double points
        profile = ConfigurationProfile(CONICS, 3, {2: 12})
        report = local_h(profile)
        assert report.numerator == strict_transform_self_intersection(6, [2] * 12)
        assert report.h == Fraction(-1)

    def test_quadric_numerator(self):
        report = local_h(ConfigurationProfile(ONE_ONE, 4, {2: 12}))
        assert report.numerator == 2 * 16 - 48 == -16
        assert report.h == Fraction(-4, 3)
        assert report.degree_total == 8

    def test_no_singular_points(self):
        with pytest.raises(NoSingularPointsError):
            local_h(ConfigurationProfile(LINES, 2, {}))

    def test_invalid_profile(self):
        with pytest.raises(ProfileInvalidError):
            local_h(ConfigurationProfile(CONICS, 3, {2: 11}))

    @given(feasible_profiles())
    def test_exactness(self, profile):
        report = local_h(profile)
        assert report.h * report.s == report.numerator
        assert report.s == moments(profile).f0

    @given(conic_profiles())
    def test_conic_reduction_identity(self, profile):
        ms = moments(profile)
        assert 4 * profile.k**2 - ms.f2 == 4 * profile.k - ms.f1

    @given(feasible_profiles())
    def test_numerator_against_primitive(self, profile):
        ms = moments(profile)
        mults = [r for r, c in profile.t.items() for _ in range(c)]
        report = local_h(profile)
        if profile.curve_class.is_plane:
            d = profile.curve_class.member_degree * profile.k
            assert report.numerator == strict_transform_self_intersection(d, mults)
        else:
            assert report.numerator == 2 * profile.k**2 - ms.f2


class TestFormatDecimal:
    def test_reference_roundings(self):
        assert format_decimal(Fraction(-147, 52), 3) == "-2.827"
        assert format_decimal(Fraction(-225, 67), 2) == "-3.36"
        assert format_decimal(Fraction(-225, 68), 2) == "-3.31"

    def test_integers(self):
        assert format_decimal(Fraction(-3), 3) == "-3.000"
        assert format_decimal(Fraction(0), 2) == "0.00"
        assert format_decimal(Fraction(5, 2), 0) == "2"

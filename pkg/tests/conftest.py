"""Shared generators for feasible configuration profiles."""

from __future__ import annotations

from math import comb

from hypothesis import strategies as st

from harbourne.profiles import (
    CONICS,
    ConfigurationProfile,
    CurveClass,
    CurveKind,
    LINES,
    ONE_ONE,
)


def random_feasible_t(rng, curve_class: CurveClass, k: int, require_tk_zero=False):
    """Random t-vector satisfying the incidence identity exactly."""
    budget = curve_class.pairwise_intersection * comb(k, 2)
    t: dict[int, int] = {}
    r_top = k - 1 if require_tk_zero else k
    for r in range(r_top, 2, -1):
        weight = comb(r, 2)
        cap = budget // weight
        if curve_class.kind is CurveKind.CONIC_P2 and r == k:
            cap = min(cap, 4)
        if cap <= 0:
            continue
        count = rng.randint(0, cap)
        if count:
            t[r] = count
            budget -= weight * count
    if budget:
        t[2] = budget
    return t


def random_valid_profile(rng, curve_class, k, require_tk_zero=False):
    return ConfigurationProfile(
        curve_class, k, random_feasible_t(rng, curve_class, k, require_tk_zero)
    )


@st.composite
def feasible_profiles(
    draw,
    classes=(LINES, CONICS, ONE_ONE),
    min_k=3,
    max_k=9,
    require_tk_zero=False,
):
    cls = draw(st.sampled_from(list(classes)))
    k = draw(st.integers(min_k, max_k))
    budget = cls.pairwise_intersection * comb(k, 2)
    t: dict[int, int] = {}
    r_top = k - 1 if require_tk_zero else k
    for r in range(r_top, 2, -1):
        weight = comb(r, 2)
        cap = budget // weight
        if cls.kind is CurveKind.CONIC_P2 and r == k:
            cap = min(cap, 4)
        if cap <= 0:
            continue
        count = draw(st.integers(0, cap))
        if count:
            t[r] = count
            budget -= weight * count
    if budget:
        t[2] = budget
    return ConfigurationProfile(cls, k, t)


def line_profiles(min_k=3, max_k=12):
    return feasible_profiles(classes=(LINES,), min_k=min_k, max_k=max_k)


def conic_profiles(min_k=3, max_k=9, require_tk_zero=False):
    return feasible_profiles(
        classes=(CONICS,), min_k=min_k, max_k=max_k, require_tk_zero=require_tk_zero
    )


def quadric_profiles(min_k=4, max_k=9, require_tk_zero=True):
    return feasible_profiles(
        classes=(ONE_ONE,), min_k=min_k, max_k=max_k, require_tk_zero=require_tk_zero
    )

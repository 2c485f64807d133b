"""Exhaustive enumeration of feasible multiplicity vectors and exact
H-minimization.

The incidence identity is an integer feasibility problem: spend the
budget gamma*C(k,2) on parts of size C(r,2).  Enumeration is a pruned
depth-first search from the largest multiplicity down; the r = 2 level
absorbs whatever budget remains, so every branch closes.  Output is
labelled combinatorially feasible only: no geometric realizability is
implied, which makes the minimum an over-approximating (hence valid)
lower-bound probe.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterator

from . import constraints
from .hconst import local_h
from .profiles import (
    ConfigurationProfile,
    CurveClass,
    CurveKind,
    CONIC_COMMON_POINT_CAP,
    HarbourneError,
)

DEFAULT_LIMIT = 10_000_000


class SearchQueryError(HarbourneError):
    """The query is internally inconsistent (class/filter mismatch etc.)."""


class Filter(Enum):
    LT_QUADRATIC = "lt"
    HIRZEBRUCH_11 = "hirz11"


@dataclass(frozen=True)
class SearchQuery:
    curve_class: CurveClass
    k: int
    require_tk_zero: bool = False
    filters: frozenset[Filter] = dc_field(default_factory=frozenset)
    limit: int | None = DEFAULT_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "filters", frozenset(self.filters))
        if self.k < 3:
            raise SearchQueryError(f"search requires k >= 3, got k={self.k}")
        if self.limit is not None and self.limit < 0:
            raise SearchQueryError("limit must be >= 0 (or None for unlimited)")
        if Filter.LT_QUADRATIC in self.filters:
            if self.curve_class.kind is not CurveKind.CONIC_P2:
                raise SearchQueryError(
                    "the lt filter applies to conic configurations only"
                )
            if not self.require_tk_zero:
                raise SearchQueryError("the lt filter requires tk0")
        if Filter.HIRZEBRUCH_11 in self.filters:
            if self.curve_class.kind is not CurveKind.ONE_ONE_QUADRIC:
                raise SearchQueryError(
                    "the hirz11 filter applies to (1,1)-curve configurations only"
                )
            if not self.require_tk_zero:
                raise SearchQueryError("the hirz11 filter requires tk0")
            if self.k < 4:
                raise SearchQueryError("the hirz11 filter requires k >= 4")


@dataclass(frozen=True)
class SearchResult:
    min_h: Fraction | None
    argmin_profiles: tuple[ConfigurationProfile, ...]
    enumerated_count: int
    filtered_count: int
    truncated: bool = False

    @property
    def empty(self) -> bool:
        return self.min_h is None


def enumerate_profiles(query: SearchQuery) -> Iterator[ConfigurationProfile]:
    """Yield every feasible t-vector exactly once.

    Order is decreasing-r lexicographic: the count at the largest
    multiplicity varies slowest and starts at its maximum.  Pruning is by
    remaining budget; the conic common-point cap bounds t_k directly.
    """
    k = query.k
    budget = query.curve_class.pairwise_intersection * comb(k, 2)
    r_max = k - 1 if query.require_tk_zero else k
    conic = query.curve_class.kind is CurveKind.CONIC_P2

    def walk(r: int, remaining: int, acc: dict[int, int]):
        if r == 2:
            if remaining:
                acc = dict(acc)
                acc[2] = remaining  # part size C(2,2) = 1
            yield ConfigurationProfile(query.curve_class, k, acc)
            return
        part = comb(r, 2)
        cap = remaining // part
        if conic and r == k:
            cap = min(cap, CONIC_COMMON_POINT_CAP)
        for count in range(cap, -1, -1):
            child = dict(acc)
            if count:
                child[r] = count
            yield from walk(r - 1, remaining - count * part, child)

    if r_max < 2:
        return
    yield from walk(r_max, budget, {})


def _passes(profile: ConfigurationProfile, filters: frozenset[Filter]) -> bool:
    if Filter.LT_QUADRATIC in filters:
        q = constraints.positivity_quadratic(profile)
        if not constraints.holds_over_integers(q).holds:
            return False
    if Filter.HIRZEBRUCH_11 in filters:
        if not constraints.hirzebruch_one_one(profile).holds:
            return False
    return True


def minimize_h(query: SearchQuery) -> SearchResult:
    """Exact minimum of the local H-constant over the filtered enumeration.

    Ties are kept: every argmin profile is reported.  ``filtered_count``
    is the number of enumerated profiles that survived the filters.
    """
    enumerated = 0
    surviving = 0
    best: Fraction | None = None
    argmins: list[ConfigurationProfile] = []
    truncated = False

    for profile in enumerate_profiles(query):
        if query.limit is not None and enumerated >= query.limit:
            truncated = True
            break
        enumerated += 1
        if not _passes(profile, query.filters):
            continue
        surviving += 1
        h = local_h(profile).h
        if best is None or h < best:
            best = h
            argmins = [profile]
        elif h == best:
            argmins.append(profile)

    return SearchResult(
        min_h=best,
        argmin_profiles=tuple(argmins),
        enumerated_count=enumerated,
        filtered_count=surviving,
        truncated=truncated,
    )

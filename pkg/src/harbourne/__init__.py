"""Exact Harbourne constants for curve configurations.

Combinatorial profiles of transversal line, conic and (1,1)-curve
configurations; exact local H-constants at the singular locus; the
inequality predicates that bound them; the combinatorial and
coordinate-level standard Cremona transformation; a symbolic cover
computation backing the quadric inequality; and exhaustive searches
over feasible multiplicity vectors.
"""

from .profiles import (
    CONICS,
    ConfigurationProfile,
    CurveClass,
    CurveKind,
    HarbourneError,
    LINES,
    MomentSet,
    ONE_ONE,
    ProfileInvalidError,
    ValidationReport,
    moments,
    plane_curves,
    validate,
)
from .hconst import HReport, format_decimal, local_h, strict_transform_self_intersection
from .constraints import (
    CaseBound,
    CaseTag,
    HirzebruchCheck,
    IntegerCheck,
    QuadraticConstraint,
    classify_conic_case,
    hirzebruch_one_one,
    holds_over_integers,
    positivity_at_one,
    positivity_quadratic,
)
from .cremona import (
    CremonaMode,
    CremonaSpec,
    LawStep,
    cremona_profile,
    h_transformation_law,
    iterate_law,
)
from .search import Filter, SearchQuery, SearchResult, enumerate_profiles, minimize_h

__all__ = [
    "CONICS",
    "CaseBound",
    "CaseTag",
    "ConfigurationProfile",
    "CremonaMode",
    "CremonaSpec",
    "CurveClass",
    "CurveKind",
    "Filter",
    "HReport",
    "HarbourneError",
    "HirzebruchCheck",
    "IntegerCheck",
    "LINES",
    "LawStep",
    "MomentSet",
    "ONE_ONE",
    "ProfileInvalidError",
    "QuadraticConstraint",
    "SearchQuery",
    "SearchResult",
    "ValidationReport",
    "classify_conic_case",
    "cremona_profile",
    "enumerate_profiles",
    "format_decimal",
    "h_transformation_law",
    "hirzebruch_one_one",
    "holds_over_integers",
    "iterate_law",
    "local_h",
    "minimize_h",
    "moments",
    "plane_curves",
    "positivity_at_one",
    "positivity_quadratic",
    "strict_transform_self_intersection",
    "validate",
]

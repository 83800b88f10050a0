"""Exact-arithmetic toolkit for sum-dominant (MSTD) set theory.

Computes sumsets and difference sets, classifies finite integer sets,
canonically enumerates affine classes to locate minimal sum-dominant sets,
and machine-verifies the structural claims the search relies on.
"""

from .setcore import (
    APSpec,
    AffineTransform,
    EmptySetError,
    IntSet,
    RationalSet,
    SetClass,
    SetLiteralError,
    SetProfile,
    affine_normalize,
    ap_plus_two_decomposition,
    classify,
    detect_ap,
    diffset,
    is_symmetric,
    profile,
    reflect_canonical,
    scale_to_integers,
    sum_diff_sizes,
    sumset,
)
from .structure import (
    DeltaProfile,
    DifferenceTable,
    GapVector,
    cardinality_bounds,
    difference_table,
    equal_diff_pairs,
    equal_sum_pairs,
    gaps,
    insertion_delta,
)
from .reports import DEFAULT_SEED, VerificationReport
from .search import SearchConfig, SearchResult, find_min_mstd

__all__ = [
    "APSpec",
    "AffineTransform",
    "DEFAULT_SEED",
    "DeltaProfile",
    "DifferenceTable",
    "EmptySetError",
    "GapVector",
    "IntSet",
    "RationalSet",
    "SearchConfig",
    "SearchResult",
    "SetClass",
    "SetLiteralError",
    "SetProfile",
    "VerificationReport",
    "affine_normalize",
    "ap_plus_two_decomposition",
    "cardinality_bounds",
    "classify",
    "detect_ap",
    "difference_table",
    "diffset",
    "equal_diff_pairs",
    "equal_sum_pairs",
    "find_min_mstd",
    "gaps",
    "insertion_delta",
    "is_symmetric",
    "profile",
    "reflect_canonical",
    "scale_to_integers",
    "sum_diff_sizes",
    "sumset",
]

"""Subsets of Z_N avoiding k-term cyclic arithmetic progressions:
difference-gcd sets, forbidden-set constructions and independence-number
bounds, exact search at small N, proper colorings, and the resulting cyclic
Van der Waerden lower bounds."""

from .cache import CacheRecord, ResultsCache
from .coloring import (
    PartitionPlan,
    WcBoundRow,
    build_partition,
    cycles,
    cyclic_difference,
    split_alternating,
    verify_partition,
    wc_lower_bounds,
)
from .construction import (
    BoundsReport,
    ForbiddenSet,
    ProgressionClassWitness,
    build_avoiding,
    build_forbidden,
    exactness_test,
    forbidden_size_formula,
    theorem_bounds,
    witness_class,
)
from .errors import (
    BudgetExceededError,
    CyclicVdwError,
    DegenerateProgressionError,
    InternalInconsistencyError,
    InvalidArgumentError,
)
from .progressions import (
    ConjectureReport,
    CyclicProgression,
    DifferenceSet,
    RingParams,
    canonical_diffs,
    check_conjecture,
    conjectured_difference_set,
    difference_gcd_set,
    enumerate_progressions,
    find_contained_progression,
    generating_pairs,
    make_progression,
    subgroup_order,
)
from .search import (
    ColoringResult,
    HypergraphView,
    IndependenceResult,
    SearchBudget,
    build_hypergraph,
    chromatic_number,
    independence_number,
    is_r_colorable,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BudgetExceededError",
    "CacheRecord",
    "ColoringResult",
    "ConjectureReport",
    "CyclicProgression",
    "CyclicVdwError",
    "DegenerateProgressionError",
    "DifferenceSet",
    "ForbiddenSet",
    "HypergraphView",
    "IndependenceResult",
    "InternalInconsistencyError",
    "InvalidArgumentError",
    "PartitionPlan",
    "ProgressionClassWitness",
    "ResultsCache",
    "RingParams",
    "SearchBudget",
    "WcBoundRow",
    "build_avoiding",
    "build_forbidden",
    "build_hypergraph",
    "build_partition",
    "canonical_diffs",
    "check_conjecture",
    "chromatic_number",
    "conjectured_difference_set",
    "cycles",
    "cyclic_difference",
    "difference_gcd_set",
    "enumerate_progressions",
    "exactness_test",
    "find_contained_progression",
    "forbidden_size_formula",
    "generating_pairs",
    "independence_number",
    "is_r_colorable",
    "make_progression",
    "split_alternating",
    "subgroup_order",
    "theorem_bounds",
    "verify_partition",
    "wc_lower_bounds",
    "witness_class",
]

"""Finite-automaton presentations of intersections of multiplicative
translates of the 3-adic Cantor set, with path-set operations and
Perron-eigenvalue dimension computations."""

from .operations import decimate, interleave, interleave_multi
from .presentation import (
    NotRightResolvingError,
    Presentation,
    PresentationError,
    SccDecomposition,
    canonical_form,
    determinize,
    is_right_resolving,
    isomorphic,
    label_product,
    minimize,
    scc_decomposition,
    trim,
    verify_automorphism,
)
from .spectral import (
    DimensionReport,
    adjacency_matrix,
    count_initial_blocks,
    entropy_estimate,
    hausdorff_dimension,
    lk_char_poly_root,
    spectral_radius,
)
from .translate import (
    TernaryStats,
    build_family,
    build_translate_presentation,
    family_member,
    normalize_multiplier,
    run_automaton,
    ternary_stats,
    to_ternary,
)

__version__ = "0.1.0"

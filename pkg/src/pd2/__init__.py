"""Mod 2 graded-commutative algebras of rank at most 16: construction,
isomorphism testing, exhaustive classification and Borel spectral
sequence rank bookkeeping for involutions on products of spheres."""

from .algebra import (GradedAlgebra, HilbertSeries, check_poincare_duality,
                      hilbert_series, make_algebra, minimal_generators,
                      validate_algebra)
from .catalog import catalog_instantiate, grid_instances, match_catalog
from .classifier import (EnumerationConstraints, IsoClassSet, StructureProfile,
                         admissible_patterns, check_rank_tail_inequality,
                         classify_connected, classify_disconnected, derive_profile,
                         enumerate_connected_rank8, enumerate_k_spheres_extremes,
                         survey_rank8)
from .constructors import (connected_sum, disjoint_union, from_presentation,
                           make_truncated, parse_presentation, point, presentation,
                           sphere, tensor_product, wedge_sum)
from .iso import are_isomorphic, canonical_form, find_isomorphism, presentation_string
from .spectral import (InvolutionAction, e2_page, enumerate_differential_patterns,
                       feasible_fixed_ranks, nontnhz_connected_possibilities,
                       preset_action, validate_action)
from .verify import verify_theorem

__version__ = "0.1.0"

__all__ = [
    "admissible_patterns",
    "are_isomorphic",
    "canonical_form",
    "catalog_instantiate",
    "check_poincare_duality",
    "check_rank_tail_inequality",
    "classify_connected",
    "classify_disconnected",
    "connected_sum",
    "derive_profile",
    "disjoint_union",
    "e2_page",
    "enumerate_connected_rank8",
    "enumerate_differential_patterns",
    "enumerate_k_spheres_extremes",
    "EnumerationConstraints",
    "feasible_fixed_ranks",
    "find_isomorphism",
    "from_presentation",
    "GradedAlgebra",
    "grid_instances",
    "hilbert_series",
    "HilbertSeries",
    "InvolutionAction",
    "IsoClassSet",
    "make_algebra",
    "make_truncated",
    "match_catalog",
    "minimal_generators",
    "nontnhz_connected_possibilities",
    "parse_presentation",
    "point",
    "presentation",
    "presentation_string",
    "preset_action",
    "sphere",
    "StructureProfile",
    "survey_rank8",
    "tensor_product",
    "validate_action",
    "validate_algebra",
    "verify_theorem",
    "wedge_sum",
]

"""Inverse semigroups of labelled spaces and their tight spectra.

A labelled space is a finite directed graph with edge labels plus an
accommodating family of vertex sets.  This package builds the associated
inverse semigroup of triples, enumerates filters and ultrafilters of its
idempotent semilattice, computes the tight spectrum, and relates it to the
boundary path space of the underlying graph.
"""

from .boundary import boundary_paths, isolated_points, make_finite_path, make_infinite_path
from .errors import (
    CoverError,
    DomainError,
    InputError,
    LabelledSpaceError,
    ParseError,
    UnsupportedFamilyError,
)
from .family import AccommodatingFamily, RestrictedAlgebra, closure, powerset_family, validate
from .filters import (
    FiniteFilterFamily,
    LassoFilterFamily,
    PrincipalFilter,
    all_filters,
    enumerate_complete_families,
    es_filter_membership,
    is_es_ultrafilter,
    is_maximal_complete_family,
    preimage_filter,
    ultrafilters,
)
from .graph import (
    Edge,
    LabelledGraph,
    is_labelled_path,
    is_left_resolving,
    label_edge_set,
    range_of,
    relative_range,
    singular_vertices,
    sinks,
)
from .semigroup import (
    ZERO,
    SElement,
    inverse,
    is_idempotent,
    leq,
    make_element,
    meet,
    multiply,
    parse_element,
)
from .spectra import (
    CoverCertificate,
    boundary_to_filter,
    compare_spectrum_with_boundary,
    is_tight,
    is_tight_finite_type,
    refute_tightness,
    sink_ultrafilters,
    tight_spectrum,
    union_cover,
)
from .transition import UltrafilterTransitionGraph, ultrafilter_transition_graph

__all__ = [
    "AccommodatingFamily",
    "CoverCertificate",
    "CoverError",
    "DomainError",
    "Edge",
    "FiniteFilterFamily",
    "InputError",
    "LabelledGraph",
    "LabelledSpaceError",
    "LassoFilterFamily",
    "ParseError",
    "PrincipalFilter",
    "RestrictedAlgebra",
    "SElement",
    "UltrafilterTransitionGraph",
    "UnsupportedFamilyError",
    "ZERO",
    "all_filters",
    "boundary_paths",
    "boundary_to_filter",
    "closure",
    "compare_spectrum_with_boundary",
    "enumerate_complete_families",
    "es_filter_membership",
    "inverse",
    "is_es_ultrafilter",
    "is_idempotent",
    "is_labelled_path",
    "is_left_resolving",
    "is_maximal_complete_family",
    "is_tight",
    "is_tight_finite_type",
    "isolated_points",
    "label_edge_set",
    "leq",
    "make_element",
    "make_finite_path",
    "make_infinite_path",
    "meet",
    "multiply",
    "parse_element",
    "powerset_family",
    "preimage_filter",
    "range_of",
    "refute_tightness",
    "relative_range",
    "singular_vertices",
    "sink_ultrafilters",
    "sinks",
    "tight_spectrum",
    "ultrafilter_transition_graph",
    "ultrafilters",
    "union_cover",
    "validate",
]

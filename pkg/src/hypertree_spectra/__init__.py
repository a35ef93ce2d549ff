"""Spectral radii of k-uniform hypergraphs and extremal supertree checks."""

from .canon import canonical_form, is_isomorphic
from .census import (
    Census,
    CensusRecord,
    VerificationReport,
    enumerate_supertrees,
    enumerate_trees,
    verify_extremal,
)
from .families import (
    double_star,
    hyperstar,
    hyperstar_orbits,
    loose_path,
    loose_path_reflection_orbits,
    s_cycle,
    s_path,
    single_edge,
    tree_power,
)
from .hypergraph import (
    Hypergraph,
    IncidenceMatrix,
    format_hypergraph,
    incidence_matrix,
    is_connected,
    is_linear,
    is_supertree,
    parse_hypergraph,
    pendent_edges,
    read_hypergraph,
    validate,
    write_hypergraph,
)
from .spectral import (
    BoundsReport,
    SpectralResult,
    alpha_star,
    bounds_report,
    closed_form_hyperstar,
    matrix_spectral_radius,
    orbit_constancy_check,
    spectral_radius,
)
from .tensors import DenseTensor, TensorKind, apply, dense_build, rayleigh
from .transforms import (
    EdgeMoveSpec,
    GraftStep,
    PendentPath,
    edge_release,
    edge_release_best,
    find_pendent_paths,
    graft_to_path,
    move_edges,
    total_graft,
)

__all__ = [
    "Census",
    "CensusRecord",
    "VerificationReport",
    "enumerate_supertrees",
    "enumerate_trees",
    "verify_extremal",
    "canonical_form",
    "is_isomorphic",
    "double_star",
    "hyperstar",
    "hyperstar_orbits",
    "loose_path",
    "loose_path_reflection_orbits",
    "s_cycle",
    "s_path",
    "single_edge",
    "tree_power",
    "Hypergraph",
    "IncidenceMatrix",
    "format_hypergraph",
    "incidence_matrix",
    "is_connected",
    "is_linear",
    "is_supertree",
    "parse_hypergraph",
    "pendent_edges",
    "read_hypergraph",
    "validate",
    "write_hypergraph",
    "BoundsReport",
    "SpectralResult",
    "alpha_star",
    "bounds_report",
    "closed_form_hyperstar",
    "matrix_spectral_radius",
    "orbit_constancy_check",
    "spectral_radius",
    "DenseTensor",
    "TensorKind",
    "apply",
    "dense_build",
    "rayleigh",
    "EdgeMoveSpec",
    "GraftStep",
    "PendentPath",
    "edge_release",
    "edge_release_best",
    "find_pendent_paths",
    "graft_to_path",
    "move_edges",
    "total_graft",
]

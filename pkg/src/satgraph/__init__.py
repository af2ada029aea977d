"""Saturation for k-edge-connected and k-connected graphs.

Constructions, exact connectivity, saturation verdicts, exhaustive
sat/ex search at small order, and spectral-radius bounds.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .connectivity import (
    SubgraphWitness,
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    has_k_connected_subgraph,
    has_k_edge_connected_subgraph,
    min_vertex_cut,
    vertex_connectivity,
)
from .constructions import (
    GknLayout,
    build_complete_split,
    build_gkn,
    build_k_minus,
    build_k_tree,
    extremal_count,
    rho,
)
from .errors import BudgetExceeded, GraphError
from .graph import (
    Cut,
    Graph,
    add_edge,
    canonical_form,
    complement_edges,
    degree_profile,
    format_edge_list,
    induced_subgraph,
    is_connected,
    new_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .saturation import (
    SaturationReport,
    SearchResult,
    check_extremal_structure,
    is_saturated_edge,
    is_saturated_vertex,
    lemma_invariant_suite,
    search_optimum,
)
from .spectral import (
    Partition,
    QuotientMatrix,
    degree_bounds_check,
    is_equitable,
    quotient_spectral_radius,
    saturated_spectral_floor,
    spectral_radius,
)

__all__ = [
    "__version__",
    "BACKEND",
    "BudgetExceeded",
    "GraphError",
    "SubgraphWitness",
    "contains_k_minus",
    "edge_connectivity",
    "global_min_edge_cut",
    "has_k_connected_subgraph",
    "has_k_edge_connected_subgraph",
    "min_vertex_cut",
    "vertex_connectivity",
    "GknLayout",
    "build_complete_split",
    "build_gkn",
    "build_k_minus",
    "build_k_tree",
    "extremal_count",
    "rho",
    "Cut",
    "Graph",
    "add_edge",
    "canonical_form",
    "complement_edges",
    "degree_profile",
    "format_edge_list",
    "induced_subgraph",
    "is_connected",
    "new_graph",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "SaturationReport",
    "SearchResult",
    "check_extremal_structure",
    "is_saturated_edge",
    "is_saturated_vertex",
    "lemma_invariant_suite",
    "search_optimum",
    "Partition",
    "QuotientMatrix",
    "degree_bounds_check",
    "is_equitable",
    "quotient_spectral_radius",
    "saturated_spectral_floor",
    "spectral_radius",
]

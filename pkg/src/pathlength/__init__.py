"""Network analysis with min-plus path length matrices."""

from pathlength.graph import Graph, GraphError, apply_perturbation, from_edge_list, is_symmetric, to_one_star
from pathlength.tropical import (
    NegativeCycleError,
    TropicalMatrix,
    diameter,
    kpath_matrix,
    minplus_multiply,
    path_length_matrix,
    shortest_path_count,
)
from pathlength.measures import (
    InMeasures,
    MeasureReport,
    ReciprocalMatrix,
    analyze,
    avg_shortest_path_length,
    center,
    closeness,
    eccentricity,
    global_efficiency,
    h_center,
    harary_index,
    harmonic,
    in_measures,
    radius,
    reciprocal,
)
from pathlength.spectral import PerronData, ReducibleMatrixError, is_irreducible, perron, perron_bounds
from pathlength.enhance import EnhanceError, Proposal, ekg1, ekg2, improve

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "apply_perturbation",
    "from_edge_list",
    "is_symmetric",
    "to_one_star",
    "NegativeCycleError",
    "TropicalMatrix",
    "diameter",
    "kpath_matrix",
    "minplus_multiply",
    "path_length_matrix",
    "shortest_path_count",
    "InMeasures",
    "MeasureReport",
    "ReciprocalMatrix",
    "analyze",
    "avg_shortest_path_length",
    "center",
    "closeness",
    "eccentricity",
    "global_efficiency",
    "h_center",
    "harary_index",
    "harmonic",
    "in_measures",
    "radius",
    "reciprocal",
    "PerronData",
    "ReducibleMatrixError",
    "is_irreducible",
    "perron",
    "perron_bounds",
    "EnhanceError",
    "Proposal",
    "ekg1",
    "ekg2",
    "improve",
]

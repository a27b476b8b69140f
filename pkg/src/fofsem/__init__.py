"""fofsem: friends-of-friends neighborhood semantics, their Jaccard
divergence, and the effect of semantics choice on peer-effect model
selection."""

from .generators import GeneratorSpec, generate, generate_ba, generate_er, generate_ws
from .graph import Graph, load_edge_list, write_edge_list
from .modelfit import FitResult, compare_semantics, ols_fit
from .neighborhoods import (
    NeighborSet,
    SemanticsKind,
    neighbors_path_k,
    neighbors_shortest_k,
    oracle_neighbors,
    path_count_k,
)
from .setstats import JaccardSummary, jaccard_distance, jaccard_graph
from .synth import AggKind, AttributeTable, aggregate, gen_outcome, gen_treatment

__all__ = [
    "AggKind",
    "AttributeTable",
    "FitResult",
    "GeneratorSpec",
    "Graph",
    "JaccardSummary",
    "NeighborSet",
    "SemanticsKind",
    "aggregate",
    "compare_semantics",
    "gen_outcome",
    "gen_treatment",
    "generate",
    "generate_ba",
    "generate_er",
    "generate_ws",
    "jaccard_distance",
    "jaccard_graph",
    "load_edge_list",
    "neighbors_path_k",
    "neighbors_shortest_k",
    "ols_fit",
    "oracle_neighbors",
    "path_count_k",
    "write_edge_list",
]

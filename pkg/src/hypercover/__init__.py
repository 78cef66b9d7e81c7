"""Greedy hypergraph edge covers with certified bounds, strong-degeneracy
peeling, tree domination, duality, exact oracles, and instance generators."""

from .core import (
    CHECK_KINDS,
    Hypergraph,
    ShatterWitness,
    SubHypergraph,
    check,
    degree,
    dual,
    format_hypergraph,
    maximal_edges,
    parse_hypergraph,
    restrict,
    shatter_check,
    strong_degree,
    strong_remove,
    vc_dimension,
)
from .cover import (
    CoverCertificate,
    CoverChecks,
    TransversalCertificate,
    TransversalChecks,
    greedy_cover,
    greedy_transversal,
)
from .degeneracy import (
    EliminationOrder,
    degeneracy,
    mighty_degeneracy_bf,
    strong_degeneracy,
    strong_degeneracy_bf,
)
from .domination import (
    GRAPH_CHECK_KINDS,
    NEIGHBORHOOD_KINDS,
    AuditReport,
    DominationCertificate,
    DominationChecks,
    Graph,
    check_graph,
    format_graph,
    neighborhood_equivalence_audit,
    neighborhood_hypergraph,
    parse_graph,
    tree_domination,
)
from .generators import (
    complete_graph,
    cycle_graph,
    gap_family,
    path_graph,
    prufer_decode,
    prufer_encode,
    random_graph,
    random_hypergraph,
    random_tree,
    star_graph,
)
from .oracles import (
    GRAPH_PROBLEMS,
    HYPERGRAPH_PROBLEMS,
    PROBLEMS,
    ExactResult,
    exact,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "CHECK_KINDS",
    "CoverCertificate",
    "CoverChecks",
    "DominationCertificate",
    "DominationChecks",
    "EliminationOrder",
    "ExactResult",
    "GRAPH_CHECK_KINDS",
    "GRAPH_PROBLEMS",
    "Graph",
    "HYPERGRAPH_PROBLEMS",
    "Hypergraph",
    "NEIGHBORHOOD_KINDS",
    "PROBLEMS",
    "ShatterWitness",
    "SubHypergraph",
    "TransversalCertificate",
    "TransversalChecks",
    "check",
    "check_graph",
    "complete_graph",
    "cycle_graph",
    "degeneracy",
    "degree",
    "dual",
    "errors",
    "exact",
    "format_graph",
    "format_hypergraph",
    "gap_family",
    "greedy_cover",
    "greedy_transversal",
    "maximal_edges",
    "mighty_degeneracy_bf",
    "neighborhood_equivalence_audit",
    "neighborhood_hypergraph",
    "parse_graph",
    "parse_hypergraph",
    "path_graph",
    "prufer_decode",
    "prufer_encode",
    "random_graph",
    "random_hypergraph",
    "random_tree",
    "restrict",
    "shatter_check",
    "star_graph",
    "strong_degeneracy",
    "strong_degeneracy_bf",
    "strong_degree",
    "strong_remove",
    "tree_domination",
    "vc_dimension",
]

"""Exact clique counts and vertex-localized clique-count bounds."""

from ._core import (
    BudgetExceeded,
    Graph,
    InvariantViolation,
    ParseError,
    PreconditionError,
    __version__,
    bound_report,
    complete_graph,
    complete_multipartite,
    count_cliques,
    cycle_graph,
    delta,
    descend,
    empty_graph,
    eval_phi,
    localized_bound,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_graph,
    regular_multipartite_parts,
    vertex_clique_numbers,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "__version__",
    "bound_report",
    "complete_graph",
    "complete_multipartite",
    "count_cliques",
    "cycle_graph",
    "delta",
    "descend",
    "empty_graph",
    "eval_phi",
    "localized_bound",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "random_graph",
    "regular_multipartite_parts",
    "vertex_clique_numbers",
]

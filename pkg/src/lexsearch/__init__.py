"""Lexicographic graph searches: LexBFS, LexUP, LexDFS and LexDOWN.

The package provides the naive reference search (the executable
specification and oracle), brute-force enumeration of all valid
orderings, an independent ordering verifier, fast engines — partition
refinement for LexBFS/LexUP in O(n+m), a sorted candidate list for
LexDFS/LexDOWN in O(n + m log m) — plus graph parsing/generation and an
operation-count benchmark harness behind the ``lexsearch`` CLI.
"""

from .counters import OpCounters
from .fast_bfs import fast_lexbfs, fast_lexup
from .fast_dfs import fast_lexdfs, fast_lexdown, sort_neighbors
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphParseError,
    clique_graph,
    cycle_graph,
    format_edge_list,
    generate,
    grid_graph,
    is_connected,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    random_connected_graph,
)
from .labels import (
    EQUAL,
    GREATER,
    INF,
    LESS,
    MINUS_INF,
    Label,
    SearchKind,
    format_label,
    lex_compare,
    lex_compare_counted,
    update,
)
from .reference import (
    InvalidPrefixError,
    SearchTrace,
    TraceStep,
    enumerate_orderings,
    lowest_id,
    reference_search,
)
from .verify import Verdict, replay_selection_labels, verify_ordering

__all__ = [
    "DisconnectedGraphError",
    "EQUAL",
    "GREATER",
    "GraphError",
    "GraphParseError",
    "Graph",
    "INF",
    "InvalidPrefixError",
    "LESS",
    "Label",
    "MINUS_INF",
    "OpCounters",
    "SearchKind",
    "SearchTrace",
    "TraceStep",
    "Verdict",
    "clique_graph",
    "cycle_graph",
    "enumerate_orderings",
    "fast_lexbfs",
    "fast_lexdfs",
    "fast_lexdown",
    "fast_lexup",
    "format_edge_list",
    "format_label",
    "generate",
    "grid_graph",
    "is_connected",
    "lex_compare",
    "lex_compare_counted",
    "lowest_id",
    "parse_dimacs",
    "parse_edge_list",
    "path_graph",
    "random_connected_graph",
    "replay_selection_labels",
    "reference_search",
    "sort_neighbors",
    "update",
    "verify_ordering",
]

__version__ = "0.1.0"

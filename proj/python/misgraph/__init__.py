"""Bipartite graphs with a prescribed number of maximal independent sets."""

from ._misgraph import (
    BipartiteGraph,
    GraphParseError,
    OracleCapExceeded,
    count_is,
    count_mis,
    gadget_family,
    mersenne_forest,
    realize,
    realize_pattern,
    search_gadgets,
    staircase_count,
    staircase_graph,
)

__all__ = [
    "BipartiteGraph",
    "GraphParseError",
    "OracleCapExceeded",
    "count_is",
    "count_mis",
    "gadget_family",
    "mersenne_forest",
    "realize",
    "realize_pattern",
    "search_gadgets",
    "staircase_count",
    "staircase_graph",
]

"""Graph model, file ingestion and the built-in graph family."""

from .graph import WeightedGraph, GraphLike, as_matrix
from .parser import GraphFile, parse_graph, parse_edge_list, parse_dense, dump_dense
from . import family

__all__ = [
    "WeightedGraph",
    "GraphLike",
    "as_matrix",
    "GraphFile",
    "parse_graph",
    "parse_edge_list",
    "parse_dense",
    "dump_dense",
    "family",
]

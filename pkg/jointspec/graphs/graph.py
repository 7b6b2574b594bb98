"""The weighted graph every operation consumes."""

from dataclasses import dataclass
from typing import Union

import networkx as nx
import numpy as np

from ..linalg.matrix import SYMMETRY_TOL, SymmetricMatrix


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Symmetric weight matrix plus a display name."""
    matrix: SymmetricMatrix
    name: str = "graph"

    @classmethod
    def from_array(cls, values, name: str = "graph", tol: float = SYMMETRY_TOL) -> "WeightedGraph":
        return cls(matrix=SymmetricMatrix.from_array(values, tol), name=name)

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str = "graph") -> "WeightedGraph":
        """Nodes are taken in sorted order; missing weights count as 1."""
        nodes = sorted(g.nodes())
        arr = nx.to_numpy_array(g, nodelist=nodes, weight="weight", dtype=float)
        return cls.from_array(arr, name=name)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries

    @property
    def integral(self) -> bool:
        return self.matrix.integral

    @property
    def loopless(self) -> bool:
        return bool(np.all(np.diag(self.entries) == 0))

    @property
    def simple(self) -> bool:
        """Loopless with 0/1 weights."""
        return self.loopless and bool(np.all((self.entries == 0) | (self.entries == 1)))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        for i, j in zip(*np.nonzero(np.triu(self.entries))):
            g.add_edge(int(i), int(j), weight=float(self.entries[i, j]))
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)


GraphLike = Union[WeightedGraph, SymmetricMatrix, np.ndarray]


def as_matrix(g: GraphLike) -> SymmetricMatrix:
    """Accept a graph, a SymmetricMatrix or a raw array."""
    if isinstance(g, WeightedGraph):
        return g.matrix
    if isinstance(g, SymmetricMatrix):
        return g
    return SymmetricMatrix.from_array(g)

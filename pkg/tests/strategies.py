"""Hypothesis strategies for graphs and series."""

import numpy as np
from hypothesis import strategies as st

from jointspec.graphs.graph import WeightedGraph


@st.composite
def integer_graphs(draw, min_n: int = 1, max_n: int = 5, low: int = -2, high: int = 2):
    """Random symmetric integer matrices as WeightedGraphs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    upper = [[draw(st.integers(min_value=low, max_value=high)) for _ in range(n)] for _ in range(n)]
    arr = np.array(upper, dtype=float)
    return WeightedGraph.from_array(np.triu(arr) + np.triu(arr, 1).T, name=f"int{n}")


@st.composite
def simple_graphs(draw, min_n: int = 2, max_n: int = 6):
    """0/1 adjacency matrices without loops."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    arr = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            arr[i, j] = arr[j, i] = draw(st.integers(min_value=0, max_value=1))
    return WeightedGraph.from_array(arr, name=f"simple{n}")

"""Shared graphs and helpers for the test suite."""

import numpy as np
import pytest

from jointspec.graphs import family
from jointspec.graphs.graph import WeightedGraph


@pytest.fixture
def p2():
    """Single edge."""
    return family.path(2)


@pytest.fixture
def p3():
    return family.path(3)


@pytest.fixture
def k3():
    """Triangle."""
    return family.complete(3)


@pytest.fixture
def k4():
    return family.complete(4)


@pytest.fixture
def diag35():
    """Already diagonal: the eigenbasis is the identity."""
    return WeightedGraph.from_array(np.diag([3.0, 5.0]), name="diag35")


@pytest.fixture
def empty2():
    """Two isolated vertices."""
    return WeightedGraph.from_array(np.zeros((2, 2)), name="empty2")


@pytest.fixture
def write_graph(tmp_path):
    """Write graph text to a file and return its path."""
    def _write(text: str, name: str = "graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


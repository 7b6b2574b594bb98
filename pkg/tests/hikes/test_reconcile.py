"""Tests that every generating function reconciles with brute force."""

import numpy as np
import pytest

from jointspec.graphs import family
from jointspec.graphs.graph import WeightedGraph
from jointspec.hikes.heaps import enumerate_hikes
from jointspec.hikes.reconcile import (
    induced_zeta_witness,
    log_ru_check,
    pyramid_check,
    reconcile_all,
    ru_check,
)


def failures(checks):
    return [c for c in checks if not c.passed]


class TestReconcileAll:
    """Test the full battery on small graphs."""

    @pytest.mark.parametrize("graph,u", [
        ("p2", (0,)),
        ("p3", (1,)),
        ("k3", (0, 1)),
        ("k4", (0,)),
        ("k4", (0, 1, 2, 3)),
    ])
    def test_family(self, request, graph, u):
        """Test ζ, E_u, R_u, r_u, Λ, log r_u and Boolean cumulants at L = 6."""
        g = request.getfixturevalue(graph)
        checks = reconcile_all(g, u, 6)
        assert checks
        assert failures(checks) == []

    def test_covers_every_series_constructor(self, k3):
        """Test ζ, the Möbius series, r_u and the Boolean cumulants are each compared with enumeration."""
        names = {c.name.split("[")[0] for c in reconcile_all(k3, (0,), 4)}
        assert {"zeta=hikes", "mobius=cycle-covers", "r_u=filtered-hikes", "boolean=excursions"} <= names

    def test_weighted_with_loop(self):
        """Test signed weights and a self-loop."""
        g = WeightedGraph.from_array(np.array([[1.0, -2.0, 0.0], [-2.0, 0.0, 1.0], [0.0, 1.0, 0.0]]))
        assert failures(reconcile_all(g, (0, 2), 5)) == []

    def test_float_weights(self):
        """Test non-integer weights reconcile within tolerance."""
        g = WeightedGraph.from_array(np.array([[0.0, 0.5, 0.25], [0.5, 0.0, 1.5], [0.25, 1.5, 0.0]]))
        assert failures(reconcile_all(g, (1,), 5)) == []

    def test_shared_hike_list(self, k3):
        """Test a precomputed hike list gives the same checks."""
        hikes = enumerate_hikes(k3, 5)
        assert failures(ru_check(k3, (0,), 5, hikes)) == []
        assert failures(log_ru_check(k3, (0,), 5, hikes)) == []


class TestPyramids:
    """Test Λ(h) closed walks project onto each pyramid."""

    @pytest.mark.parametrize("graph", ["p3", "k3", "k4"])
    def test_pyramid_counts(self, request, graph):
        """Test walk projections land on hikes, Λ(h) times each."""
        checks = pyramid_check(request.getfixturevalue(graph), 5)
        assert failures(checks) == []
        assert checks[-1].name == "walk-projections-are-hikes"

    def test_cycle_graph(self):
        """Test C4 where 4-cycles and backtracks mix."""
        assert failures(pyramid_check(family.cycle(4), 6)) == []


class TestInducedZeta:
    """Test ζ of an induced subgraph is not r_u in general."""

    def test_triangle_vertex(self, k3):
        """Test ζ_{1} = 1 while r_{1} = 1 + 2z² + …"""
        check = induced_zeta_witness(k3, [0], 6)
        assert check.passed
        assert check.context["degree"] == 2

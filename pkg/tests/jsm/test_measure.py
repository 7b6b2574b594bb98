"""Tests for the joint spectral measure."""

import numpy as np
import pytest
from hypothesis import given, settings

from jointspec.errors import CapExceededError, DomainError
from jointspec.graphs import family
from jointspec.jsm.measure import (
    build_measure,
    marginal_distribution,
    moment_oracle,
    moment_scale,
    rooted_spectral_measure,
)
from jointspec.jsm.moments import generalized_moment
from jointspec.linalg.eigen import eigendecompose
from tests.strategies import integer_graphs


class TestBuildMeasure:
    """Test atoms and weights of μ."""

    def test_single_edge_atoms(self, p2):
        """Test P2 has atoms (−1, 1) and (1, −1), each of weight 1/2."""
        measure = build_measure(eigendecompose(p2.matrix))
        atoms = {tuple(round(x) for x in a.point): a.weight for a in measure.atoms}
        assert set(atoms) == {(-1, 1), (1, -1)}
        assert atoms[(-1, 1)] == pytest.approx(0.5)
        assert atoms[(1, -1)] == pytest.approx(0.5)

    def test_diagonal_is_a_point_mass(self, diag35):
        """Test an already diagonal matrix gives the single atom (3, 5)."""
        measure = build_measure(eigendecompose(diag35.matrix))
        assert len(measure.atoms) == 1
        assert measure.atoms[0].point == pytest.approx((3.0, 5.0))
        assert measure.atoms[0].weight == pytest.approx(1.0)

    def test_repeated_eigenvalues_merge(self, k3):
        """Test K3 atoms are keyed by class vectors and the mass is 1."""
        measure = build_measure(eigendecompose(k3.matrix))
        assert measure.total_mass == pytest.approx(1.0)
        assert len({a.classes for a in measure.atoms}) == len(measure.atoms)
        assert all(sorted(a.classes) == [0, 0, 1] for a in measure.atoms)

    def test_cap_enforced(self):
        """Test n above the cap raises CapExceededError naming the cap."""
        with pytest.raises(CapExceededError, match="cap 3"):
            build_measure(eigendecompose(family.path(4).matrix), cap=3)

    @settings(max_examples=25, deadline=None)
    @given(integer_graphs(max_n=5))
    def test_total_mass_one(self, g):
        """Test μ is normalized for random integer matrices."""
        assert build_measure(eigendecompose(g.matrix)).total_mass == pytest.approx(1.0, abs=1e-10)


class TestMomentOracle:
    """Test atom sums against the determinant formula."""

    @pytest.mark.parametrize("k,expected", [((1, 0), 0.0), ((1, 1), -1.0), ((2, 0), 1.0), ((0, 0), 1.0)])
    def test_single_edge(self, p2, k, expected):
        """Test two-atom sums on P2."""
        measure = build_measure(eigendecompose(p2.matrix))
        assert moment_oracle(measure, k) == pytest.approx(expected, abs=1e-12)

    def test_diagonal(self, diag35):
        """Test the point mass at (3, 5) gives 3²·5 = 45."""
        measure = build_measure(eigendecompose(diag35.matrix))
        assert moment_oracle(measure, (2, 1)) == pytest.approx(45.0)

    def test_wrong_length_rejected(self, p2):
        """Test a multi-index of the wrong length raises DomainError."""
        measure = build_measure(eigendecompose(p2.matrix))
        with pytest.raises(DomainError):
            moment_oracle(measure, (1, 1, 1))

    @settings(max_examples=25, deadline=None)
    @given(integer_graphs(min_n=2, max_n=4))
    def test_oracle_matches_determinant(self, g):
        """Test Σ w·x^k = det A[k] for a few multi-indices."""
        measure = build_measure(eigendecompose(g.matrix))
        for k in [(1,) * g.n, (2,) + (0,) * (g.n - 1), tuple(range(g.n))]:
            exact = float(generalized_moment(g, k))
            assert abs(moment_oracle(measure, k) - exact) <= 1e-7 * max(1.0, moment_scale(measure, k))


class TestMarginals:
    """Test rooted spectral measures against the marginals of μ."""

    def test_rooted_single_edge(self, p2):
        """Test μ_1 of P2 puts 1/2 on each of ±1."""
        rooted = rooted_spectral_measure(eigendecompose(p2.matrix), 0)
        assert [v for v, _ in rooted] == pytest.approx([-1.0, 1.0])
        assert [w for _, w in rooted] == pytest.approx([0.5, 0.5])

    def test_rooted_equals_marginal(self, k3):
        """Test P(X_i in class c) from the atoms equals Σ p_ij² over the class."""
        eig = eigendecompose(k3.matrix)
        measure = build_measure(eig)
        for i in range(3):
            law = marginal_distribution(measure, i)
            for c, (_, weight) in enumerate(rooted_spectral_measure(eig, i)):
                assert law.get(c, 0.0) == pytest.approx(weight, abs=1e-10)

    def test_rooted_moments_are_closed_walks(self, k4):
        """Test Σ w λ^k over μ_i equals (A^k)_ii."""
        rooted = rooted_spectral_measure(eigendecompose(k4.matrix), 1)
        power = np.linalg.matrix_power(k4.entries, 3)
        assert sum(w * v ** 3 for v, w in rooted) == pytest.approx(power[1, 1])

"""Tests for generalized moments and the identities built on them."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from jointspec.errors import DomainError
from jointspec.graphs import family
from jointspec.jsm.moments import (
    analytic_minor,
    covariance_matrix,
    cumulant,
    cycle_partition_identity,
    generalized_moment,
    laplacian,
    marginal_check,
    power_covariance,
    resolvent_moment_series,
    submatrix_charpoly,
    trace_identity,
)
from jointspec.jsm.partitions import set_partitions
from jointspec.jsm.polynomial import Polynomial
from tests.strategies import integer_graphs, simple_graphs

X = Polynomial.of([0, 1])
X_SQUARED = Polynomial.of([0, 0, 1])


class TestGeneralizedMoment:
    """Test m[k] = det A[k]."""

    @pytest.mark.parametrize("k,expected", [((0, 0), 1), ((2, 0), 1), ((1, 1), -1), ((1, 0), 0)])
    def test_single_edge(self, p2, k, expected):
        """Test moments of P2 from the column-mixed determinant."""
        value = generalized_moment(p2, k)
        assert value == expected
        assert isinstance(value, int)

    def test_diagonal(self, diag35):
        """Test the deterministic measure at (3, 5)."""
        assert generalized_moment(diag35, (2, 1)) == 45

    def test_float_matrix(self):
        """Test non-integer weights go through the float path."""
        g = family.path(2)
        half = g.entries * 0.5
        assert generalized_moment(half, (1, 1)) == pytest.approx(-0.25)

    def test_negative_exponent_rejected(self, p2):
        """Test negative exponents raise DomainError."""
        with pytest.raises(DomainError):
            generalized_moment(p2, (-1, 0))


class TestMarginals:
    """Test E(X_i^k) = (A^k)_ii."""

    def test_triangle_sequence(self, k3):
        """Test K3 gives 1, 0, 2, 2, 6 at vertex 1."""
        report = marginal_check(k3, 0, 4)
        assert [row.closed_walks for row in report.rows] == [1, 0, 2, 2, 6]
        assert report.max_deviation == pytest.approx(0.0, abs=1e-9)

    def test_single_edge_parity(self, p2):
        """Test P2 alternates 1, 0 exactly on the integer path."""
        report = marginal_check(p2, 0, 6)
        assert [row.determinant_moment for row in report.rows] == [1, 0, 1, 0, 1, 0, 1]

    def test_diagonal(self, diag35):
        """Test diag(3, 5) at vertex 2 gives powers of 5."""
        report = marginal_check(diag35, 1, 3)
        assert [row.closed_walks for row in report.rows] == [1, 5, 25, 125]


class TestCovariance:
    """Test covariance against the Laplacian."""

    def test_single_edge(self, p2):
        """Test P2 covariance [[1, −1], [−1, 1]]."""
        assert covariance_matrix(p2).tolist() == [[1, -1], [-1, 1]]

    def test_triangle(self, k3):
        """Test K3 has 2 on the diagonal and −1 elsewhere."""
        assert covariance_matrix(k3).tolist() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]

    def test_diagonal_is_deterministic(self, diag35):
        """Test a point mass has zero covariance."""
        assert covariance_matrix(diag35).tolist() == [[0, 0], [0, 0]]

    @settings(max_examples=30, deadline=None)
    @given(simple_graphs(max_n=6))
    def test_equals_laplacian(self, g):
        """Test covariance = D − A on loopless 0/1 graphs."""
        assert covariance_matrix(g).tolist() == laplacian(g).tolist()


class TestPowerCovariance:
    """Test cov(X_i^k, X_j^k) = −((A^k)_ij)²."""

    def test_single_edge(self, p2):
        """Test P2, k = 1 gives −1."""
        assert power_covariance(p2, 0, 1, 1) == -1

    def test_triangle_squares(self, k3):
        """Test K3, k = 2 gives −((A²)_12)² = −1."""
        assert power_covariance(k3, 0, 1, 2) == -1

    def test_zero_power(self, k4):
        """Test X⁰ is constant."""
        assert power_covariance(k4, 0, 3, 0) == 0

    def test_same_vertex_rejected(self, k3):
        """Test i = j raises DomainError."""
        with pytest.raises(DomainError):
            power_covariance(k3, 1, 1, 2)

    @settings(max_examples=20, deadline=None)
    @given(simple_graphs(max_n=5))
    def test_never_positive(self, g):
        """Test the covariance is ≤ 0 for every pair and k ≤ 4."""
        for k in range(5):
            assert power_covariance(g, 0, 1, k) <= 0


class TestCumulants:
    """Test joint cumulants against signed cycle weights."""

    def test_triangle_full(self, k3):
        """Test K3, u = all gives κ = 2 from the two orientations."""
        assert cumulant(k3, (0, 1, 2)) == 2

    def test_single_edge(self, p2):
        """Test P2, u = {1, 2} gives κ = −1."""
        assert cumulant(p2, (0, 1)) == -1

    def test_loopless_singleton(self, k4):
        """Test κ({i}) = A_ii = 0 without loops."""
        assert cumulant(k4, (2,)) == 0

    @settings(max_examples=25, deadline=None)
    @given(integer_graphs(min_n=2, max_n=5))
    def test_cycle_partitions(self, g):
        """Test det(−A_uu) equals the signed sum over cycle partitions."""
        for size in range(1, min(4, g.n) + 1):
            lhs, rhs = cycle_partition_identity(g, tuple(range(size)))
            assert lhs == rhs

    def test_partition_counts(self):
        """Test Bell numbers 1, 2, 5, 15."""
        assert [len(list(set_partitions(range(n)))) for n in range(1, 5)] == [1, 2, 5, 15]


class TestAnalyticIdentities:
    """Test det f(A)_uu, tr f(A)_uu and the submatrix characteristic polynomial."""

    def test_minor_identity_polynomial(self, k3):
        """Test f(x) = x, u = all reduces to det A."""
        assert analytic_minor(k3, (0, 1, 2), X) == (2, 2)

    def test_minor_squares(self, k3):
        """Test f(x) = x², u = {1, 2} on K3 gives det[[2,1],[1,2]] = 3."""
        assert analytic_minor(k3, (0, 1), X_SQUARED) == (3, 3)

    def test_minor_singular(self, p2):
        """Test f(x) = 1 + x on P2 gives det[[1,1],[1,1]] = 0."""
        assert analytic_minor(p2, (0, 1), Polynomial.of([1, 1])) == (0, 0)

    @pytest.mark.parametrize("u,expected", [((0,), (1, 1))])
    def test_trace_single_edge(self, p2, u, expected):
        """Test tr (A²)_11 = 1 on P2."""
        assert trace_identity(p2, u, X_SQUARED) == expected

    def test_trace_triangle(self, k3):
        """Test tr A² = 2·#edges = 6 on K3."""
        assert trace_identity(k3, (0, 1, 2), X_SQUARED) == (6, 6)

    def test_trace_loopless_identity(self, k4):
        """Test tr A_uu = 0 without loops."""
        assert trace_identity(k4, (0, 2), X) == (0, 0)

    @pytest.mark.parametrize("graph,u,f,expected", [
        ("p2", (0,), X, (0, 1)),
        ("p2", (0, 1), X, (-1, 0, 1)),
        ("k3", (0, 1), X_SQUARED, (3, -4, 1)),
    ])
    def test_charpoly(self, request, graph, u, f, expected):
        """Test E∏(z − f(X_i)) coefficients, lowest first."""
        g = request.getfixturevalue(graph)
        assert submatrix_charpoly(g, u, f).coefficients == expected

    @settings(max_examples=25, deadline=None)
    @given(integer_graphs(min_n=2, max_n=4))
    def test_minor_identity_random(self, g):
        """Test det f(A)_uu = E∏f(X_i) for f(x) = 1 − x + x²."""
        lhs, rhs = analytic_minor(g, (0, 1), Polynomial.of([1, -1, 1]))
        assert lhs == rhs


class TestResolventMoments:
    """Test the homogeneous moment generating function."""

    def test_triangle_vertex(self, k3):
        """Test E(1 − zX_1)⁻¹ on K3 is 1 + 2z² + 2z³ + 6z⁴."""
        assert resolvent_moment_series(k3, (0,), 4).coefficients == (1, 0, 2, 2, 6)

    def test_two_vertices(self, p2):
        """Test E∏(1 − zX_i)⁻¹ on P2 has coefficient m[1,1] + m[2,0] + m[0,2] = 1 at z²."""
        series = resolvent_moment_series(p2, (0, 1), 2)
        assert series.coefficients == (1, 0, 1)

    def test_fraction_polynomial(self, p2):
        """Test rational polynomial coefficients stay exact."""
        f = Polynomial.of([Fraction(1, 2), 1])
        lhs, rhs = analytic_minor(p2, (0, 1), f)
        assert lhs == rhs == Fraction(1, 4) - 1


class TestPolynomial:
    """Test polynomial evaluation."""

    def test_evaluate(self):
        """Test 1 + 2x² at a scalar and at a matrix."""
        f = Polynomial.of([1, 0, 2])
        assert f.degree == 2
        assert f(3) == 19
        assert f.of_matrix(np.array([[0, 1], [1, 0]])).tolist() == [[3, 0], [0, 3]]

    def test_empty_rejected(self):
        """Test a polynomial needs a coefficient."""
        with pytest.raises(DomainError):
            Polynomial(())

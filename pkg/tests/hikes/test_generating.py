"""Tests for the hike, excursion and resolvent generating functions."""

from fractions import Fraction

import pytest

from jointspec.hikes.generating import (
    boolean_cumulants,
    excursion_matrix,
    induced_zeta,
    log_ru_series,
    mobius_series,
    resolvent_block,
    rooted_moment_series,
    ru_series,
    von_mangoldt_series,
    von_mangoldt_u_series,
    zeta_series,
)


class TestZeta:
    """Test ζ = 1/det(I − zA)."""

    def test_triangle(self, k3):
        """Test K3: 1/(1 − 3z² − 2z³)."""
        assert mobius_series(k3, 4).coefficients == (1, 0, -3, -2, 0)
        assert zeta_series(k3, 5).coefficients == (1, 0, 3, 2, 9, 12)

    def test_single_edge(self, p2):
        """Test P2: 1/(1 − z²)."""
        assert zeta_series(p2, 6).coefficients == (1, 0, 1, 0, 1, 0, 1)

    def test_no_edges(self, empty2):
        """Test a graph without cycles has only the empty hike."""
        assert zeta_series(empty2, 4).coefficients == (1, 0, 0, 0, 0)

    def test_induced(self, k3):
        """Test the induced subgraph on two vertices is an edge; the empty set gives 1."""
        assert induced_zeta(k3, [0, 1], 4).coefficients == (1, 0, 1, 0, 1)
        assert induced_zeta(k3, [], 3).coefficients == (1, 0, 0, 0)


class TestExcursions:
    """Test E_u and R_u = (I − E_u)⁻¹."""

    def test_single_edge(self, p2):
        """Test the only excursion from an end of P2 is there and back."""
        assert excursion_matrix(p2, [0], 4).entry(0, 0).coefficients == (0, 0, 1, 0, 0)

    def test_triangle(self, k3):
        """Test K3 at one vertex: two excursions of every length ≥ 2."""
        assert excursion_matrix(k3, [0], 5).entry(0, 0).coefficients == (0, 0, 2, 2, 2, 2)

    def test_full_set(self, k3):
        """Test a full u gives E_u = zA."""
        e = excursion_matrix(k3, [0, 1, 2], 3)
        assert e[1].tolist() == k3.matrix.values().tolist()
        assert all(v == 0 for v in e[2].ravel())

    def test_resolvent_block(self, k3):
        """Test the z² coefficient of R_{12} is (A²)_{12,12}."""
        r = resolvent_block(k3, [0, 1], 4)
        assert r[2].tolist() == [[2, 1], [1, 2]]


class TestRu:
    """Test r_u = det R_u = ζ/ζ_ū."""

    def test_triangle_vertex(self, k3):
        """Test a single vertex gives its closed-walk series."""
        assert ru_series(k3, [0], 4).coefficients == (1, 0, 2, 2, 6)
        assert rooted_moment_series(k3, 0, 4).coefficients == (1, 0, 2, 2, 6)

    def test_full_set_is_zeta(self, k4):
        """Test r_V = ζ."""
        assert ru_series(k4, [0, 1, 2, 3], 6) == zeta_series(k4, 6)

    def test_ratio(self, k4):
        """Test r_u = ζ/ζ_ū on K4 with u = {1, 2}."""
        assert ru_series(k4, [0, 1], 6) == zeta_series(k4, 6) / induced_zeta(k4, [2, 3], 6)


class TestTraces:
    """Test tr R and tr R_u."""

    def test_triangle_trace(self, k3):
        """Test tr A^k = 2^k + 2(−1)^k on K3."""
        series = von_mangoldt_series(k3, 6)
        assert series.coefficients == tuple(2 ** k + 2 * (-1) ** k for k in range(7))

    def test_local_trace(self, k3):
        """Test tr R_u for a single vertex is its closed-walk series."""
        assert von_mangoldt_u_series(k3, [0], 4).coefficients == (1, 0, 2, 2, 6)


class TestLogAndBoolean:
    """Test log r_u and the Boolean cumulants."""

    def test_log_single_edge(self, p2):
        """Test log 1/(1 − z²) = Σ z^{2j}/j."""
        log = log_ru_series(p2, [0], 6)
        assert log.coefficients == (0, 0, 1, 0, Fraction(1, 2), 0, Fraction(1, 3))

    def test_log_triangle(self, k3):
        """Test the z² and z³ coefficients on K3 at one vertex."""
        log = log_ru_series(k3, [0], 3)
        assert log[2] == 2
        assert log[3] == 2

    def test_boolean_single_edge(self, p2):
        """Test X_1 on P2 is a symmetric sign: B(z) = z²."""
        assert boolean_cumulants(p2, 0, 4).coefficients == (0, 0, 1, 0, 0)

    def test_boolean_are_excursions(self, k3):
        """Test the Boolean cumulants of K3 at a vertex count excursions."""
        assert boolean_cumulants(k3, 0, 5).coefficients == (0, 0, 2, 2, 2, 2)

    def test_float_weights(self, p2):
        """Test non-integer weights switch to floats."""
        half = p2.entries * 0.5
        assert boolean_cumulants(half, 0, 2)[2] == pytest.approx(0.25)

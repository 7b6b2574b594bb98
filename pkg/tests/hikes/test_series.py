"""Tests for truncated scalar and matrix power series."""

from fractions import Fraction

import numpy as np
import pytest

from jointspec.errors import DomainError
from jointspec.hikes.series import MatrixSeries, TruncatedSeries


class TestTruncatedSeries:
    """Test ring operations at a fixed degree."""

    def test_padding(self):
        """Test of() pads with zeros and truncates."""
        assert TruncatedSeries.of([1, 2], 3).coefficients == (1, 2, 0, 0)
        assert TruncatedSeries.of([1, 2, 3, 4], 1).coefficients == (1, 2)

    def test_geometric_inverse(self):
        """Test 1/(1 − z) = 1 + z + z² + …"""
        assert TruncatedSeries.of([1, -1], 4).inverse().coefficients == (1, 1, 1, 1, 1)

    def test_rational_inverse(self):
        """Test 1/(2 + z) keeps Fractions."""
        inv = TruncatedSeries.of([2, 1], 2).inverse()
        assert inv.coefficients == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8))
        assert inv.exact

    def test_log(self):
        """Test log(1 + z) = z − z²/2 + z³/3."""
        log = TruncatedSeries.of([1, 1], 3).log()
        assert log.coefficients == (0, 1, Fraction(-1, 2), Fraction(1, 3))

    def test_scalar_arithmetic(self):
        """Test 1 − s and s·2."""
        s = TruncatedSeries.of([0, 1], 2)
        assert (1 - s).coefficients == (1, -1, 0)
        assert (s * 2).coefficients == (0, 2, 0)

    def test_zero_constant(self):
        """Test inverting a series with c_0 = 0 raises DomainError."""
        with pytest.raises(DomainError):
            TruncatedSeries.of([0, 1], 2).inverse()

    def test_log_needs_one(self):
        """Test log with c_0 ≠ 1 raises DomainError."""
        with pytest.raises(DomainError):
            TruncatedSeries.of([2, 1], 2).log()

    def test_degree_mismatch(self):
        """Test series of different degrees do not mix."""
        with pytest.raises(DomainError):
            TruncatedSeries.of([1], 2) + TruncatedSeries.of([1], 3)

    def test_str(self):
        """Test printing skips zero terms."""
        assert str(TruncatedSeries.of([1, 0, 3], 2)) == "1 + 3*z^2"


class TestMatrixSeries:
    """Test matrix-coefficient series."""

    def test_geometric(self):
        """Test Σ z^k A^k for A = [[2]]."""
        series = MatrixSeries.geometric(np.array([[2]], dtype=object), 3)
        assert [series[k][0, 0] for k in range(4)] == [1, 2, 4, 8]

    def test_inverse_round_trip(self):
        """Test (I − zA)·(I − zA)⁻¹ = I."""
        a = np.array([[0, 1], [1, 1]], dtype=object)
        geometric = MatrixSeries.geometric(a, 4)
        base = MatrixSeries.identity(2, 4) - MatrixSeries.of([a * 0, a], 4)
        product = base @ geometric
        assert product[0].tolist() == [[1, 0], [0, 1]]
        assert all(product[k].tolist() == [[0, 0], [0, 0]] for k in range(1, 5))
        assert base.inverse()[3].tolist() == geometric[3].tolist()

    def test_determinant(self):
        """Test det(I − zA) of a diagonal A = (1 − z)(1 − 2z)."""
        a = np.array([[1, 0], [0, 2]], dtype=object)
        base = MatrixSeries.identity(2, 3) - MatrixSeries.of([a * 0, a], 3)
        assert base.determinant().coefficients == (1, -3, 2, 0)

    def test_trace_and_shift(self):
        """Test the trace and multiplication by z."""
        series = MatrixSeries.geometric(np.array([[1, 1], [1, 1]], dtype=object), 2)
        assert series.trace().coefficients == (2, 2, 4)
        assert series.shift().trace().coefficients == (0, 2, 2)

    def test_singular_float_constant(self):
        """Test a singular float constant term cannot be inverted."""
        with pytest.raises(DomainError):
            MatrixSeries.of([np.zeros((2, 2))], 1).inverse()

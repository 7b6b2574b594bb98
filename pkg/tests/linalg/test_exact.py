"""Tests for exact rational linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointspec.errors import DomainError
from jointspec.linalg.exact import (
    RationalMatrix,
    bareiss_determinant,
    exact_charpoly,
    exact_determinant,
    exact_inverse,
    leibniz_determinant,
    permutation_sign,
)

small_ints = st.integers(min_value=-4, max_value=4)


class TestDeterminants:
    """Test Bareiss, scaled-rational and permutation-sum determinants."""

    @pytest.mark.parametrize("rows,expected", [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
        ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 2),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
    ])
    def test_known_values(self, rows, expected):
        """Test identity, K3 and P2 adjacency, and a singular matrix."""
        assert bareiss_determinant(rows) == expected
        assert exact_determinant(rows) == expected
        assert leibniz_determinant(rows) == expected

    def test_zero_pivot_needs_row_swap(self):
        """Test a matrix whose first pivot is zero."""
        rows = [[0, 2, 1], [3, 0, 1], [1, 1, 0]]
        assert bareiss_determinant(rows) == leibniz_determinant(rows)

    def test_complete_six(self):
        """Test det of the K6 adjacency is 5·(−1)^5 by every method."""
        rows = [[0 if i == j else 1 for j in range(6)] for i in range(6)]
        assert leibniz_determinant(rows) == -5
        assert bareiss_determinant(rows) == -5

    def test_rational_entries(self):
        """Test rows with denominators are scaled back exactly."""
        rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]]
        assert exact_determinant(rows) == Fraction(5, 12)

    def test_non_square_rejected(self):
        """Test a rectangular matrix raises DomainError."""
        with pytest.raises(DomainError):
            exact_determinant([[1, 2, 3], [4, 5, 6]])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_bareiss_matches_leibniz(self, rows):
        """Test fraction-free elimination against the permutation sum."""
        assert bareiss_determinant(rows) == leibniz_determinant(rows)


class TestPermutationSign:
    """Test permutation signatures."""

    @pytest.mark.parametrize("perm,sign", [
        ((0, 1, 2), 1),
        ((1, 0, 2), -1),
        ((1, 2, 0), 1),
        ((2, 1, 0), -1),
        ((), 1),
    ])
    def test_signs(self, perm, sign):
        """Test identity, transpositions and a 3-cycle."""
        assert permutation_sign(perm) == sign


class TestInverseAndCharpoly:
    """Test Gauss-Jordan inverse and Faddeev-LeVerrier coefficients."""

    def test_inverse_times_matrix_is_identity(self):
        """Test M⁻¹M = I exactly."""
        m = RationalMatrix.from_rows([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
        assert exact_inverse(m) @ m == RationalMatrix.identity(3)

    def test_singular_inverse_raises(self):
        """Test inverting a singular matrix raises DomainError."""
        with pytest.raises(DomainError):
            exact_inverse([[1, 2], [2, 4]])

    def test_charpoly_of_two_by_two(self):
        """Test det(λI − [[2,1],[1,2]]) = λ² − 4λ + 3."""
        assert exact_charpoly([[2, 1], [1, 2]]) == [3, -4, 1]

    def test_charpoly_constant_is_signed_determinant(self):
        """Test c_0 = (−1)^n det M."""
        rows = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        coeffs = exact_charpoly(rows)
        assert coeffs[0] == -exact_determinant(rows)
        assert coeffs == [-2, -3, 0, 1]


class TestRationalMatrix:
    """Test the rational matrix value type."""

    def test_hadamard_and_transpose(self):
        """Test entrywise product and transpose."""
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        b = RationalMatrix.from_rows([[Fraction(1, 2), 0], [1, 1]])
        assert a.hadamard(b) == RationalMatrix.from_rows([[Fraction(1, 2), 0], [3, 4]])
        assert a.transpose() == RationalMatrix.from_rows([[1, 3], [2, 4]])

    def test_ragged_rows_rejected(self):
        """Test non-rectangular input raises DomainError."""
        with pytest.raises(DomainError):
            RationalMatrix.from_rows([[1, 2], [3]])

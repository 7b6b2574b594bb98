"""Tests for Schur-complement resolvent blocks."""

import numpy as np
import pytest

from jointspec.errors import DomainError
from jointspec.linalg.schur import resolvent_block, schur_block


class TestSchurBlock:
    """Test the Schur block against direct inversion."""

    def test_at_zero_is_identity(self, p2):
        """Test the resolvent at z = 0 is the identity."""
        np.testing.assert_allclose(schur_block(p2.matrix, [0], 0.0), [[1.0]])

    def test_single_edge_half(self, p2):
        """Test P2, u = {1}, z = 1/2 gives 1/(1 − 1/4) = 4/3."""
        np.testing.assert_allclose(schur_block(p2.matrix, [0], 0.5), [[4.0 / 3.0]])

    def test_triangle_quarter(self, k3):
        """Test both routes agree on K3 at z = 1/4."""
        np.testing.assert_allclose(schur_block(k3.matrix, [0], 0.25), resolvent_block(k3.matrix, [0], 0.25),
                                   atol=1e-12)

    def test_two_vertex_block(self, k4):
        """Test a 2×2 block of K4."""
        np.testing.assert_allclose(schur_block(k4.matrix, [1, 3], 0.1), resolvent_block(k4.matrix, [1, 3], 0.1),
                                   atol=1e-12)

    def test_full_subset_rejected(self, p2):
        """Test u must be a proper subset."""
        with pytest.raises(DomainError):
            schur_block(p2.matrix, [0, 1], 0.1)

    def test_singular_inner_named(self, k3):
        """Test a singular inner inversion is reported as such."""
        with pytest.raises(DomainError, match="inner"):
            schur_block(k3.matrix, [0], 1.0)

    def test_singular_outer_named(self, p2):
        """Test a singular outer Schur complement is reported as such."""
        with pytest.raises(DomainError, match="outer"):
            schur_block(p2.matrix, [0], 1.0)

"""Tests for the Jacobi eigendecomposition."""

import numpy as np
import pytest
from hypothesis import given, settings

from jointspec.errors import ConvergenceError
from jointspec.linalg.eigen import eigendecompose, group_classes
from tests.strategies import integer_graphs


class TestKnownSpectra:
    """Test small spectra worked out by hand."""

    def test_identity(self):
        """Test I₂ has one class and the identity basis."""
        eig = eigendecompose(np.eye(2))
        np.testing.assert_allclose(eig.eigenvalues, [1.0, 1.0])
        np.testing.assert_allclose(eig.basis, np.eye(2))
        assert eig.classes == ((0, 1),)

    def test_single_edge(self, p2):
        """Test P2 has eigenvalues ±1 with basis (1,−1)/√2, (1,1)/√2 up to sign."""
        eig = eigendecompose(p2.matrix)
        np.testing.assert_allclose(eig.eigenvalues, [-1.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(np.abs(eig.basis), np.full((2, 2), 1 / np.sqrt(2)), atol=1e-12)
        assert eig.simple_spectrum
        assert np.linalg.det(eig.basis) == pytest.approx(1.0)

    def test_triangle_classes(self, k3):
        """Test K3 has eigenvalues (−1, −1, 2) grouped as {1,2}, {3}."""
        eig = eigendecompose(k3.matrix)
        np.testing.assert_allclose(eig.eigenvalues, [-1.0, -1.0, 2.0], atol=1e-12)
        assert eig.classes == ((0, 1), (2,))
        assert eig.repeated_classes == ((0, 1),)
        assert eig.class_of == (0, 0, 1)

    def test_sweep_budget(self, k4):
        """Test a zero sweep budget on a non-diagonal matrix raises ConvergenceError."""
        with pytest.raises(ConvergenceError):
            eigendecompose(k4.matrix, sweeps=0)


class TestGroupClasses:
    """Test eigenvalue class grouping."""

    def test_runs_within_tolerance(self):
        """Test consecutive gaps below tol merge into one class."""
        values = np.array([-1.0, -1.0 + 1e-12, 0.5, 2.0, 2.0])
        assert group_classes(values, 1e-9) == ((0, 1), (2,), (3, 4))


class TestAgainstLapack:
    """Test Jacobi against numpy.linalg.eigh."""

    @settings(max_examples=40, deadline=None)
    @given(integer_graphs(max_n=6))
    def test_eigenvalues_match_eigh(self, g):
        """Test eigenvalues, orthogonality and reconstruction."""
        eig = eigendecompose(g.matrix)
        scale = max(1.0, g.matrix.frobenius)
        np.testing.assert_allclose(eig.eigenvalues, np.linalg.eigvalsh(g.entries), atol=1e-9 * scale)
        np.testing.assert_allclose(eig.basis.T @ eig.basis, np.eye(g.n), atol=1e-10)
        np.testing.assert_allclose(eig.reconstruct(), g.entries, atol=1e-8 * scale)

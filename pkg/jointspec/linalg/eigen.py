"""Cyclic Jacobi eigendecomposition of symmetric matrices."""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import ConvergenceError, SpectralError
from .matrix import MatrixInput, SymmetricMatrix

logger = logging.getLogger(__name__)

# Solver constants
DEFAULT_SWEEPS = 100
OFF_DIAGONAL_TOL = 1e-14    # stop when off(A) <= tol * max(1, ‖A‖_F)
CLASS_TOL = 1e-8            # eigenvalues within tol * max(1, ‖A‖_F) share a class
ORTH_TOL = 1e-10
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Sorted eigenvalues, a det +1 orthogonal basis, and equality classes."""
    eigenvalues: np.ndarray
    basis: np.ndarray
    classes: Tuple[Tuple[int, ...], ...]
    scale: float

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def class_of(self) -> Tuple[int, ...]:
        """Class id of every eigen-index."""
        out = [0] * self.n
        for c, members in enumerate(self.classes):
            for j in members:
                out[j] = c
        return tuple(out)

    @property
    def simple_spectrum(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    @property
    def repeated_classes(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)

    def with_basis(self, basis: np.ndarray) -> "EigenSystem":
        """Same spectrum and classes, another eigenbasis."""
        basis = np.array(basis, dtype=float)
        basis.setflags(write=False)
        return EigenSystem(self.eigenvalues, basis, self.classes, self.scale)

    def reconstruct(self) -> np.ndarray:
        return self.basis @ np.diag(self.eigenvalues) @ self.basis.T


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Zero a[p, q] with one plane rotation, updating a and v in place."""
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    if theta == 0.0:
        t = 1.0
    else:
        t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    rot = np.array([[c, s], [-s, c]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ rot
    a[idx, :] = rot.T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    v[:, idx] = v[:, idx] @ rot


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def group_classes(eigenvalues: np.ndarray, tol: float) -> Tuple[Tuple[int, ...], ...]:
    """Runs of ascending eigenvalues whose consecutive gaps are <= tol."""
    if eigenvalues.size == 0:
        return ()
    classes = [[0]]
    for j in range(1, eigenvalues.shape[0]):
        if eigenvalues[j] - eigenvalues[j - 1] <= tol:
            classes[-1].append(j)
        else:
            classes.append([j])
    return tuple(tuple(c) for c in classes)


def eigendecompose(
    a: MatrixInput,
    sweeps: int = DEFAULT_SWEEPS,
    class_tol: float = CLASS_TOL,
) -> EigenSystem:
    """Eigendecomposition A = P diag(λ) Pᵀ with λ ascending and det(P) = +1.

    Raises:
        ConvergenceError: off-diagonal mass did not vanish within ``sweeps``.
    """
    entries = a.entries if isinstance(a, SymmetricMatrix) else np.asarray(a, dtype=float)
    work = np.array(entries, dtype=float)
    n = work.shape[0]
    frob = float(np.linalg.norm(work))
    scale = max(1.0, frob)
    v = np.eye(n)

    converged = _off_norm(work) <= OFF_DIAGONAL_TOL * scale
    sweep = 0
    while not converged and sweep < sweeps:
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if work[p, q] != 0.0:
                    _jacobi_rotate(work, v, p, q)
        converged = _off_norm(work) <= OFF_DIAGONAL_TOL * scale
    if not converged:
        raise ConvergenceError(
            f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {_off_norm(work):.3e})"
        )
    logger.debug(f"Jacobi converged in {sweep} sweeps (n={n})")

    eigenvalues = np.diag(work).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    basis = v[:, order]
    if np.linalg.det(basis) < 0:
        basis[:, 0] = -basis[:, 0]

    eig = EigenSystem(
        eigenvalues=eigenvalues,
        basis=basis,
        classes=group_classes(eigenvalues, class_tol * scale),
        scale=frob,
    )
    eigenvalues.setflags(write=False)
    basis.setflags(write=False)
    _assert_invariants(entries, eig)
    return eig


def _assert_invariants(entries: np.ndarray, eig: EigenSystem) -> None:
    n = eig.n
    orth = float(np.max(np.abs(eig.basis.T @ eig.basis - np.eye(n))))
    if orth > ORTH_TOL:
        raise SpectralError(f"eigenbasis not orthogonal (deviation {orth:.3e})")
    det = float(np.linalg.det(eig.basis))
    if abs(det - 1.0) > ORTH_TOL:
        raise SpectralError(f"eigenbasis determinant is {det}, expected +1")
    residual = float(np.max(np.abs(entries @ eig.basis - eig.basis * eig.eigenvalues)))
    if residual > RESIDUAL_TOL * max(1.0, eig.scale):
        raise SpectralError(f"eigen residual {residual:.3e} too large")

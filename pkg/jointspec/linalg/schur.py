"""Resolvent blocks through the Schur complement."""

import logging
from typing import Sequence

import numpy as np

from ..errors import DomainError
from .matrix import MatrixInput, SymmetricMatrix, complement, submatrix, validate_subset

logger = logging.getLogger(__name__)

# Matrices with a larger condition number are treated as singular
SINGULAR_COND = 1e12


def _float_entries(a: MatrixInput) -> np.ndarray:
    if isinstance(a, SymmetricMatrix):
        return np.array(a.entries, dtype=float)
    return np.asarray(a, dtype=float)


def _checked_inverse(m: np.ndarray, which: str) -> np.ndarray:
    if m.size and np.linalg.cond(m) > SINGULAR_COND:
        raise DomainError(f"{which} is singular")
    try:
        return np.linalg.inv(m)
    except np.linalg.LinAlgError as e:
        raise DomainError(f"{which} is singular") from e


def resolvent(a: MatrixInput, z: float) -> np.ndarray:
    """(I − zA)⁻¹ by direct inversion."""
    entries = _float_entries(a)
    return _checked_inverse(np.eye(entries.shape[0]) - z * entries, "I - z*A")


def schur_block(a: MatrixInput, u: Sequence[int], z: float) -> np.ndarray:
    """(u,u) block of (I − zA)⁻¹ via the Schur complement of I − zA_ūū.

    Returns (I − zA_uu − z²A_uū(I − zA_ūū)⁻¹A_ūu)⁻¹.

    Raises:
        DomainError: u is not a proper nonempty subset, or either inversion
            is singular (the message names which one).
    """
    entries = _float_entries(a)
    n = entries.shape[0]
    u = validate_subset(n, u, proper=True)
    ubar = complement(n, u)

    a_ubub = submatrix(entries, ubar, ubar)
    radius = float(np.max(np.abs(np.linalg.eigvalsh(a_ubub)))) if ubar else 0.0
    if abs(z) * radius >= 1.0:
        logger.warning(f"|z|={abs(z)} is outside the radius of I - z*A[ubar,ubar] (spectral radius {radius:.4g})")

    inner = _checked_inverse(np.eye(len(ubar)) - z * a_ubub, "inner matrix I - z*A[ubar,ubar]")
    a_uu = submatrix(entries, u, u)
    a_uub = submatrix(entries, u, ubar)
    outer = np.eye(len(u)) - z * a_uu - z * z * (a_uub @ inner @ a_uub.T)
    return _checked_inverse(outer, "outer Schur complement I - z*A[u,u] - z^2*A[u,ubar](...)^-1*A[ubar,u]")


def resolvent_block(a: MatrixInput, u: Sequence[int], z: float) -> np.ndarray:
    """(u,u) block of the directly inverted resolvent."""
    full = resolvent(a, z)
    return submatrix(full, u, u)

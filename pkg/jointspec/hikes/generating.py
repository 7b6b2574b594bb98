"""Generating functions of hikes, excursions and closed walks as truncated series.

These only build series. Their agreement with brute-force enumeration is
checked in reconcile.py.
"""

import logging
from typing import Iterable, Sequence

import numpy as np

from ..graphs.graph import GraphLike, as_matrix
from ..linalg.exact import exact_charpoly
from ..linalg.matrix import complement, submatrix, validate_subset
from .series import MatrixSeries, TruncatedSeries, normalize

logger = logging.getLogger(__name__)


def _working(g: GraphLike) -> np.ndarray:
    return as_matrix(g).values()


def _det_identity_minus(values: np.ndarray, integral: bool, degree: int) -> TruncatedSeries:
    """det(I − zB) for a square block B; coefficient of z^m is c_{n−m} of det(λI − B)."""
    n = values.shape[0]
    if n == 0:
        return TruncatedSeries.constant(1, degree)
    charpoly = exact_charpoly(values)
    coeffs = [charpoly[n - m] if m <= n else 0 for m in range(degree + 1)]
    if not integral:
        coeffs = [float(c) for c in coeffs]
    return TruncatedSeries.of(coeffs, degree)


def mobius_series(g: GraphLike, degree: int) -> TruncatedSeries:
    """M(z) = det(I − zA), truncated at the given degree."""
    m = as_matrix(g)
    return _det_identity_minus(m.values(), m.integral, degree)


def zeta_series(g: GraphLike, degree: int) -> TruncatedSeries:
    """ζ(z) = 1/det(I − zA): the hike generating function."""
    return mobius_series(g, degree).inverse()


def induced_zeta(g: GraphLike, vertices: Iterable[int], degree: int) -> TruncatedSeries:
    """ζ of the subgraph induced on `vertices`; the empty set gives 1."""
    m = as_matrix(g)
    vertices = validate_subset(m.n, list(vertices), nonempty=False)
    block = submatrix(m.values(), vertices, vertices)
    return _det_identity_minus(block, m.integral, degree).inverse()


def resolvent_series(g: GraphLike, degree: int) -> MatrixSeries:
    """R(z) = (I − zA)⁻¹ = Σ z^k A^k."""
    return MatrixSeries.geometric(_working(g), degree)


def excursion_matrix(g: GraphLike, u: Sequence[int], degree: int) -> MatrixSeries:
    """E_u(z) = zA_uu + z²A_uū(I − zA_ūū)⁻¹A_ūu.

    Entry (a, b) counts excursions from u[a] to u[b]. A full u is accepted
    (then E_u = zA).
    """
    values = _working(g)
    n = values.shape[0]
    u = validate_subset(n, u)
    ubar = complement(n, u)
    a_uu = submatrix(values, u, u)
    zero = a_uu * 0
    mats = [zero, a_uu]
    if ubar:
        a_uub = submatrix(values, u, ubar)
        inner = MatrixSeries.geometric(submatrix(values, ubar, ubar), max(degree - 2, 0))
        for k in range(degree - 1):
            mats.append(a_uub @ inner[k] @ a_uub.T)
    return MatrixSeries.of(mats, degree)


def resolvent_block(g: GraphLike, u: Sequence[int], degree: int) -> MatrixSeries:
    """R_u(z) = (I − E_u(z))⁻¹, the (u,u) block of the resolvent."""
    e = excursion_matrix(g, u, degree)
    return (MatrixSeries.identity(e.shape[0], degree) - e).inverse()


def ru_series(g: GraphLike, u: Sequence[int], degree: int) -> TruncatedSeries:
    """r_u(z) = det R_u(z) = ζ(z)/ζ_ū(z): hikes whose right divisors all meet u."""
    return resolvent_block(g, u, degree).determinant()


def von_mangoldt_series(g: GraphLike, degree: int) -> TruncatedSeries:
    """tr R(z); coefficients k ≥ 1 are the Λ-weighted pyramid totals."""
    return resolvent_series(g, degree).trace()


def von_mangoldt_u_series(g: GraphLike, u: Sequence[int], degree: int) -> TruncatedSeries:
    """tr R_u(z); coefficients k ≥ 1 are the Λ_u-weighted pyramid totals."""
    return resolvent_block(g, u, degree).trace()


def log_ru_series(g: GraphLike, u: Sequence[int], degree: int) -> TruncatedSeries:
    return ru_series(g, u, degree).log()


def rooted_moment_series(g: GraphLike, i: int, degree: int) -> TruncatedSeries:
    """M_i(z) = Σ (A^k)_ii z^k, the closed-walk series at vertex i."""
    m = as_matrix(g)
    validate_subset(m.n, [i])
    r = resolvent_series(m, degree)
    return r.entry(i, i)


def boolean_cumulants(g: GraphLike, i: int, degree: int) -> TruncatedSeries:
    """B(z) = 1 − 1/M_i(z); coefficient k is the k-th Boolean cumulant of X_i."""
    moments = rooted_moment_series(g, i, degree)
    b = 1 - moments.inverse()
    logger.debug(f"Boolean cumulants at vertex {i}: {b.coefficients}")
    return TruncatedSeries(tuple(normalize(c) for c in b.coefficients))

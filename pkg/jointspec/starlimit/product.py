"""Star products G^(n): n copies of G glued along a vertex subset u."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from ..checks import compare
from ..errors import DomainError
from ..graphs.graph import GraphLike, as_matrix
from ..hikes.series import MatrixSeries, normalize
from ..jsm.measure import DEFAULT_MEASURE_CAP, build_measure
from ..jsm.moments import determinant, generalized_moment
from ..linalg.eigen import eigendecompose
from ..linalg.matrix import SymmetricMatrix, complement, submatrix, validate_subset
from ..models import Check

logger = logging.getLogger(__name__)

# Largest assembled dimension for which moments go through column_mix literally
LITERAL_MAX_DIM = 16
DIRECT_MAX_N = 1000


@dataclass(frozen=True)
class StarProduct:
    """G^(n) with vertex order: u first, then the n copies of ū."""
    base: SymmetricMatrix
    merge_set: Tuple[int, ...]
    copies: int

    @property
    def p(self) -> int:
        return len(self.merge_set)

    @property
    def ubar(self) -> Tuple[int, ...]:
        return tuple(complement(self.base.n, self.merge_set))

    @property
    def q(self) -> int:
        return self.base.n - self.p

    @property
    def dimension(self) -> int:
        return self.p + self.copies * self.q

    def blocks(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(A_uu, A_uū, A_ūū) in working precision."""
        values = self.base.values()
        u, ubar = list(self.merge_set), list(self.ubar)
        return submatrix(values, u, u), submatrix(values, u, ubar), submatrix(values, ubar, ubar)

    @cached_property
    def assembled(self) -> SymmetricMatrix:
        """The full (p + n(N−p))-dimensional weight matrix."""
        a_uu, a_uub, a_ubub = (b.astype(float) for b in self.blocks())
        p, q = self.p, self.q
        out = np.zeros((self.dimension, self.dimension))
        out[:p, :p] = a_uu
        for c in range(self.copies):
            lo = p + c * q
            out[:p, lo:lo + q] = a_uub
            out[lo:lo + q, :p] = a_uub.T
            out[lo:lo + q, lo:lo + q] = a_ubub
        return SymmetricMatrix.from_array(out)

    def apply(self, x_u: np.ndarray, x_c: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """A^(n) acting on (x_u, x_copies) without assembling the matrix.

        (Ax)_u = A_uu x_u + A_uū Σ_c x_c and (Ax)_c = A_ūu x_u + A_ūū x_c.
        """
        a_uu, a_uub, a_ubub = self.blocks()
        new_u = a_uu @ x_u + a_uub @ x_c.sum(axis=0)
        new_c = (a_uub.T @ x_u)[None, :] + x_c @ a_ubub.T
        return new_u, new_c


def build_star_product(g: GraphLike, u: Sequence[int], n: int) -> StarProduct:
    """Merge n copies of g at the vertices of u.

    Raises:
        DomainError: u empty or the full vertex set, or n < 1.
    """
    m = as_matrix(g)
    u = validate_subset(m.n, u, proper=True)
    if n < 1:
        raise DomainError(f"number of copies must be >= 1, got {n}")
    return StarProduct(base=m, merge_set=u, copies=n)


def _check_index(sp: StarProduct, k: Sequence[int]) -> Tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if len(k) != sp.p:
        raise DomainError(f"multi-index over u needs {sp.p} components, got {len(k)}")
    if any(x < 0 for x in k):
        raise DomainError(f"multi-index components must be >= 0, got {k}")
    return k


def _mixed_block_det(columns: List[np.ndarray]) -> object:
    block = np.empty((len(columns), len(columns)), dtype=columns[0].dtype if columns else object)
    for i, col in enumerate(columns):
        block[:, i] = col
    return determinant(block)


def literal_moment(sp: StarProduct, k: Sequence[int]):
    """det A^(n)[k_1,…,k_p,0,…,0] through column_mix on the assembled matrix."""
    k = _check_index(sp, k)
    return generalized_moment(sp.assembled, k + (0,) * (sp.dimension - sp.p))


def direct_moment(sp: StarProduct, k: Sequence[int]):
    """Same moment by repeated structured products with e_{u_i}.

    Columns outside u are identity columns, so the determinant reduces to
    the (u,u) block of the mixed columns.
    """
    k = _check_index(sp, k)
    exact = sp.base.integral
    dtype = object if exact else float
    columns = []
    for i, ki in enumerate(k):
        x_u = np.zeros(sp.p, dtype=dtype)
        x_c = np.zeros((sp.copies, sp.q), dtype=dtype)
        x_u[i] = 1
        for _ in range(ki):
            x_u, x_c = sp.apply(x_u, x_c)
        columns.append(x_u)
    return _mixed_block_det(columns)


def reduced_block_powers(sp: StarProduct, kmax: int) -> List[np.ndarray]:
    """(A^(n)^k)_uu for k = 0..kmax from the Schur closed form.

    The (u,u) resolvent block is (I − E(z))⁻¹ with
    E(z) = zA_uu + n z² A_uū (I − zA_ūū)⁻¹ A_ūu.
    """
    a_uu, a_uub, a_ubub = sp.blocks()
    mats = [a_uu * 0, a_uu]
    if sp.q:
        inner = MatrixSeries.geometric(a_ubub, max(kmax - 2, 0))
        for j in range(kmax - 1):
            mats.append((a_uub @ inner[j] @ a_uub.T) * sp.copies)
    e = MatrixSeries.of(mats, kmax)
    r = (MatrixSeries.identity(sp.p, kmax) - e).inverse()
    return [r[j] for j in range(kmax + 1)]


def reduced_moment(sp: StarProduct, k: Sequence[int]):
    """The star moment from reduced_block_powers (size independent of n)."""
    k = _check_index(sp, k)
    powers = reduced_block_powers(sp, max(k) if k else 0)
    return _mixed_block_det([powers[ki][:, i] for i, ki in enumerate(k)])


def star_moment(sp: StarProduct, k: Sequence[int], direct_max_n: int = DIRECT_MAX_N):
    """Unscaled moment E(∏ X_{u_i}^{k_i}) on G^(n), choosing the cheapest faithful path."""
    if sp.dimension <= LITERAL_MAX_DIM:
        return literal_moment(sp, k)
    if sp.copies <= direct_max_n:
        return direct_moment(sp, k)
    logger.info(f"n={sp.copies} above direct cap {direct_max_n}; using the reduced Schur path")
    return reduced_moment(sp, k)


def paths_agree(g: GraphLike, u: Sequence[int], k: Sequence[int], n: int = 100, tol: float = 1e-8) -> Check:
    """Direct structured moment against the reduced Schur moment at one n."""
    sp = build_star_product(g, u, n)
    direct = normalize(direct_moment(sp, k))
    reduced = normalize(reduced_moment(sp, k))
    scale = max(1.0, abs(float(direct)))
    return compare("star-direct=reduced", direct, reduced, tol, scale=scale,
                   context={"u": list(sp.merge_set), "k": list(k), "n": n})


def star_resolvent_closed_form(sp: StarProduct, z: float) -> np.ndarray:
    """(I − zA_uu − n z² A_uū (I − zA_ūū)⁻¹ A_ūu)⁻¹ evaluated at a number z."""
    a_uu, a_uub, a_ubub = (b.astype(float) for b in sp.blocks())
    inner = np.linalg.inv(np.eye(sp.q) - z * a_ubub) if sp.q else np.zeros((0, 0))
    outer = np.eye(sp.p) - z * a_uu - sp.copies * z * z * (a_uub @ inner @ a_uub.T)
    try:
        return np.linalg.inv(outer)
    except np.linalg.LinAlgError as e:
        raise DomainError("outer Schur complement of the star product is singular") from e


def support_norm_check(sp: StarProduct, tol: float = 1e-8, cap: int = DEFAULT_MEASURE_CAP) -> List[Check]:
    """Every support point x of μ for A^(n) has ‖x‖² = ‖A^(n)‖_F² ≤ n‖A‖_F².

    Atoms are enumerated when the dimension is within the measure cap;
    otherwise Σλ² stands in for ‖x‖², since every atom permutes λ.
    """
    assembled = sp.assembled
    frob_sq = float(np.sum(assembled.entries ** 2))
    bound = sp.copies * float(np.sum(sp.base.entries ** 2))
    context = {"u": list(sp.merge_set), "n": sp.copies}
    if sp.dimension <= cap:
        measure = build_measure(eigendecompose(assembled))
        norms = [float(np.sum(np.square(a.point))) for a in measure.atoms]
        worst = max(norms, key=lambda v: abs(v - frob_sq))
    else:
        worst = float(np.sum(np.linalg.eigvalsh(assembled.entries) ** 2))
    scale = max(1.0, frob_sq)
    checks = [compare("atom-norm=frobenius", worst, frob_sq, tol, scale=scale, context=context)]
    within = frob_sq <= bound + tol * max(1.0, bound)
    checks.append(Check(
        name="frobenius<=n*frobenius", lhs=frob_sq, rhs=bound, abs_gap=max(0.0, frob_sq - bound),
        tol=tol, passed=within, exact=False, context=context,
    ))
    return checks

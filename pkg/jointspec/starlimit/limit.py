"""The limit law of a star product and its moment / MGF identities."""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from ..checks import compare, require
from ..errors import DomainError, SpectralError
from ..graphs.graph import GraphLike, as_matrix
from ..jsm.measure import DEFAULT_MEASURE_CAP, SignedMeasure, build_measure
from ..jsm.moments import generalized_moment
from ..linalg.eigen import EigenSystem, eigendecompose
from ..linalg.matrix import SymmetricMatrix, complement, submatrix, validate_subset
from .product import DIRECT_MAX_N, StarProduct, star_moment

logger = logging.getLogger(__name__)

PSD_TOL = 1e-10
MGF_TOL = 1e-9
MGF_TAIL_TOL = 1e-10


@dataclass(frozen=True)
class LimitLaw:
    """(B_1√Y_1, …, B_p√Y_p) with Y ~ μ_D and independent symmetric signs B_i."""
    d: SymmetricMatrix
    eig: EigenSystem
    y_measure: Optional[SignedMeasure]

    @property
    def p(self) -> int:
        return self.d.n

    @property
    def sign_patterns(self) -> Tuple[Tuple[int, ...], ...]:
        """The 2^p equally likely values of (B_1, …, B_p)."""
        return tuple(itertools.product((-1, 1), repeat=self.p))

    @property
    def spectral_radius(self) -> float:
        return float(max(abs(self.eig.eigenvalues[0]), abs(self.eig.eigenvalues[-1])))


def limit_law(g: GraphLike, u: Sequence[int], cap: int = DEFAULT_MEASURE_CAP) -> LimitLaw:
    """D = A_uū A_ūu, its eigen-system and (within the cap) its joint measure.

    Raises:
        SpectralError: D has a negative eigenvalue beyond round-off.
    """
    m = as_matrix(g)
    u = validate_subset(m.n, u, proper=True)
    ubar = complement(m.n, u)
    values = m.values()
    a_uub = submatrix(values, u, ubar)
    d = SymmetricMatrix.from_array((a_uub @ a_uub.T).astype(float))
    eig = eigendecompose(d)
    if eig.eigenvalues[0] < -PSD_TOL * max(1.0, d.frobenius):
        raise SpectralError(f"D is not positive semidefinite (min eigenvalue {eig.eigenvalues[0]!r})")
    measure = build_measure(eig) if d.n <= cap else None
    return LimitLaw(d=d, eig=eig, y_measure=measure)


def law_of(sp: StarProduct) -> LimitLaw:
    return limit_law(sp.base, sp.merge_set)


def scaled_moment(sp: StarProduct, k: Sequence[int], direct_max_n: int = DIRECT_MAX_N) -> float:
    """n^{−Σk/2} · E(∏ X_{u_i}^{k_i}) on G^(n)."""
    raw = star_moment(sp, k, direct_max_n)
    s = sum(int(x) for x in k)
    n = sp.copies
    if isinstance(raw, int) or isinstance(raw, Fraction):
        value = float(Fraction(raw) / n ** (s // 2))
    else:
        value = float(raw) / n ** (s // 2)
    return value / math.sqrt(n) if s % 2 else value


def limit_moment(law: LimitLaw, k: Sequence[int]):
    """det(D[k/2]) when every k_i is even, else 0."""
    k = tuple(int(x) for x in k)
    if len(k) != law.p:
        raise DomainError(f"multi-index over u needs {law.p} components, got {len(k)}")
    if any(x % 2 for x in k):
        return 0
    return generalized_moment(law.d, tuple(x // 2 for x in k))


def _require_measure(law: LimitLaw) -> SignedMeasure:
    if law.y_measure is None:
        raise DomainError(f"limit law has no atom list (p = {law.p} above the measure cap)")
    return law.y_measure


def _truncated_product(factors: Sequence[np.ndarray], degree: int) -> float:
    """Σ_{|m| ≤ degree} ∏_i factors[i][m_i], by convolution in total degree."""
    acc = np.zeros(degree + 1)
    acc[0] = 1.0
    for f in factors:
        acc = np.convolve(acc, f)[: degree + 1]
    return float(acc.sum())


def mgf_tail_bound(law: LimitLaw, z: Sequence[float], degree: int) -> float:
    """Bound on what the degree-L truncation of either MGF side omits."""
    measure = _require_measure(law)
    r = max((abs(float(x)) for x in z), default=0.0) * math.sqrt(max(law.spectral_radius, 0.0))
    if r == 0.0:
        return 0.0
    if r >= 1.0:
        return math.inf
    tail = 0.0
    d = degree + 1
    while True:
        term = math.comb(d + law.p - 1, law.p - 1) * r ** d
        tail += term
        if term < 1e-30 or d > degree + 10000:
            break
        d += 1
    return measure.total_variation * tail


def _max_radius(law: LimitLaw, degree: int, tail_tol: float) -> float:
    """Largest common |z_i| keeping the truncation tail below tail_tol."""
    lo, hi = 0.0, 1.0 / math.sqrt(max(law.spectral_radius, 1e-300))
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if mgf_tail_bound(law, [mid] * law.p, degree) <= tail_tol:
            lo = mid
        else:
            hi = mid
    return lo


def rademacher_mgf_check(law: LimitLaw, z: Sequence[float], degree: int,
                         tol: float = MGF_TOL, tail_tol: float = MGF_TAIL_TOL) -> Tuple[float, float]:
    """E∏(1 − z_i B_i √Y_i)⁻¹ and E∏(1 − z_i² Y_i)⁻¹, both expanded to total degree L.

    Raises:
        DomainError: the truncation tail exceeds tail_tol (message gives the
            largest admissible |z|).
    """
    z = [float(x) for x in z]
    if len(z) != law.p:
        raise DomainError(f"z needs {law.p} components, got {len(z)}")
    measure = _require_measure(law)
    tail = mgf_tail_bound(law, z, degree)
    if tail > tail_tol:
        raise DomainError(
            f"truncation tail {tail:.3e} exceeds {tail_tol:.1e}; "
            f"use |z_i| < {_max_radius(law, degree, tail_tol):.4g}"
        )

    powers = np.arange(degree + 1)
    lhs = 0.0
    rhs = 0.0
    patterns = law.sign_patterns
    for atom in measure.atoms:
        roots = [math.sqrt(max(y, 0.0)) for y in atom.point]
        signed = 0.0
        for signs in patterns:
            factors = [(zi * b * r) ** powers for zi, b, r in zip(z, signs, roots)]
            signed += _truncated_product(factors, degree)
        lhs += atom.weight * signed / len(patterns)

        factors = []
        for zi, y in zip(z, atom.point):
            f = np.zeros(degree + 1)
            f[0::2] = (zi * zi * max(y, 0.0)) ** np.arange(degree // 2 + 1)
            factors.append(f)
        rhs += atom.weight * _truncated_product(factors, degree)

    require(compare("rademacher-mgf", lhs, rhs, tol, context={"z": z, "L": degree}))
    return lhs, rhs


def limit_mgf_from_moments(law: LimitLaw, z: Sequence[float], degree: int) -> float:
    """Σ_{2|k| ≤ L} z^{2k} det(D[k])."""
    z = [float(x) for x in z]
    if len(z) != law.p:
        raise DomainError(f"z needs {law.p} components, got {len(z)}")
    total = 0.0
    for k in itertools.product(range(degree // 2 + 1), repeat=law.p):
        if 2 * sum(k) > degree:
            continue
        coeff = 1.0
        for zi, ki in zip(z, k):
            coeff *= zi ** (2 * ki)
        if coeff == 0.0:
            continue
        total += coeff * float(generalized_moment(law.d, k))
    return total

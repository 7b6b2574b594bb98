"""Generalized moments of the joint spectral measure and the identities they satisfy.

Integer matrices go through exact rational arithmetic; the float value is
always computed as well and cross-checked.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..checks import compare, require
from ..errors import DomainError
from ..graphs.graph import GraphLike, as_matrix
from ..hikes.cycles import SimpleCycle, cycle_weight_sum, enumerate_simple_cycles
from ..hikes.series import Number, TruncatedSeries, normalize
from ..linalg.eigen import eigendecompose
from ..linalg.exact import exact_charpoly, exact_determinant
from ..linalg.matrix import SymmetricMatrix, column_mix, matrix_power, submatrix, validate_subset
from ..models import MarginalReport, MarginalRow
from .measure import DEFAULT_MEASURE_CAP, build_measure, moment_oracle
from .partitions import set_partitions
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

FLOAT_CROSS_TOL = 1e-8
IDENTITY_TOL = 1e-8


def hadamard_bound(m: np.ndarray) -> float:
    """∏ of column norms, an upper bound on |det m|."""
    if m.size == 0:
        return 1.0
    return float(np.prod(np.linalg.norm(m, axis=0)))


def determinant(values: np.ndarray) -> Number:
    """Exact determinant of an object (integer) array, float otherwise; det of 0×0 is 1."""
    if values.shape[0] == 0:
        return 1
    if values.dtype == object:
        return normalize(exact_determinant(values))
    return float(np.linalg.det(values.astype(float)))


def _multi_index(m: SymmetricMatrix, k: Sequence[int]) -> Tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if len(k) != m.n:
        raise DomainError(f"multi-index has {len(k)} components, matrix has dimension {m.n}")
    if any(x < 0 for x in k):
        raise DomainError(f"multi-index components must be >= 0, got {k}")
    return k


def generalized_moment(a: GraphLike, k: Sequence[int]) -> Number:
    """m[k] = det A[k_1,…,k_n], the column-mixed determinant.

    Exact int for integer matrices (checked against the float determinant),
    float otherwise.
    """
    m = as_matrix(a)
    k = _multi_index(m, k)
    mixed = column_mix(m, k)
    if not m.integral:
        return float(np.linalg.det(mixed))
    value = determinant(mixed)
    floating = mixed.astype(float)
    require(compare(
        "moment-float-cross-check", value, float(np.linalg.det(floating)), FLOAT_CROSS_TOL,
        scale=hadamard_bound(floating), context={"k": list(k)},
    ))
    return value


def index_on(n: int, exponents: dict) -> Tuple[int, ...]:
    """Multi-index with the given {vertex: exponent} entries, zero elsewhere."""
    k = [0] * n
    for i, e in exponents.items():
        k[i] += int(e)
    return tuple(k)


def marginal_check(a: GraphLike, i: int, kmax: int, tol: float = IDENTITY_TOL,
                   cap: int = DEFAULT_MEASURE_CAP) -> MarginalReport:
    """E(X_i^k) = (A^k)_ii for k = 0..kmax, by the determinant formula and,
    when n is within the measure cap, by summing atoms.
    """
    m = as_matrix(a)
    (i,) = validate_subset(m.n, [i])
    measure = build_measure(eigendecompose(m)) if m.n <= cap else None
    rows = []
    deviation = 0.0
    for k in range(kmax + 1):
        walks = normalize(matrix_power(m, k)[i, i])
        index = index_on(m.n, {i: k})
        det_moment = generalized_moment(m, index)
        require(compare("marginal", det_moment, walks, tol, context={"vertex": i, "k": k}))
        deviation = max(deviation, abs(float(det_moment) - float(walks)))
        oracle = None
        if measure is not None:
            oracle = moment_oracle(measure, index)
            scale = max(1.0, abs(float(walks)))
            require(compare("marginal-oracle", oracle, walks, tol, scale=scale,
                            context={"vertex": i, "k": k}))
            deviation = max(deviation, abs(oracle - float(walks)))
        rows.append(MarginalRow(k=k, closed_walks=float(walks), determinant_moment=float(det_moment),
                                oracle_moment=oracle))
    return MarginalReport(vertex=i, rows=rows, max_deviation=deviation)


def covariance_matrix(a: GraphLike) -> np.ndarray:
    """E(XXᵀ) − E(X)E(X)ᵀ from second-order generalized moments."""
    m = as_matrix(a)
    n = m.n
    means = [generalized_moment(m, index_on(n, {i: 1})) for i in range(n)]
    out = np.empty((n, n), dtype=object if m.integral else float)
    for i in range(n):
        for j in range(i, n):
            second = generalized_moment(m, index_on(n, {i: 2} if i == j else {i: 1, j: 1}))
            out[i, j] = out[j, i] = normalize(second - means[i] * means[j])
    return out


def laplacian(a: GraphLike) -> np.ndarray:
    """Degree matrix minus adjacency."""
    values = as_matrix(a).values()
    out = -values
    for i in range(values.shape[0]):
        out[i, i] = normalize(values[i].sum() - values[i, i])
    return out


def power_covariance(a: GraphLike, i: int, j: int, k: int, tol: float = IDENTITY_TOL) -> Number:
    """cov(X_i^k, X_j^k), checked against −((A^k)_ij)².

    Raises:
        DomainError: i = j.
    """
    m = as_matrix(a)
    if i == j:
        raise DomainError("power covariance needs distinct vertices")
    validate_subset(m.n, [i, j])
    if k < 0:
        raise DomainError(f"power must be >= 0, got {k}")
    joint = generalized_moment(m, index_on(m.n, {i: k, j: k}))
    mi = generalized_moment(m, index_on(m.n, {i: k}))
    mj = generalized_moment(m, index_on(m.n, {j: k}))
    cov = normalize(joint - mi * mj)
    entry = matrix_power(m, k)[i, j]
    require(compare("power-covariance", cov, normalize(-(entry * entry)), tol,
                    scale=float(entry) ** 2, context={"i": i, "j": j, "k": k}))
    return cov


def principal_minor(a: GraphLike, block: Sequence[int]) -> Number:
    """det(A_bb) = E(∏_{i∈b} X_i)."""
    values = as_matrix(a).values()
    return determinant(submatrix(values, block, block))


def _cycles(m: SymmetricMatrix, cycles: Optional[List[SimpleCycle]], size: int) -> List[SimpleCycle]:
    return cycles if cycles is not None else enumerate_simple_cycles(m, max_length=size)


def cumulant(a: GraphLike, u: Sequence[int], cycles: Optional[List[SimpleCycle]] = None,
             tol: float = IDENTITY_TOL) -> Number:
    """Joint cumulant κ(u) by Möbius inversion over set partitions of u.

    Checked against (−1)^{|u|−1}·c(u), c(u) being the weight of the simple
    cycles with vertex set exactly u.
    """
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    total = 0
    for partition in set_partitions(u):
        b = len(partition)
        term = (-1) ** (b - 1) * math.factorial(b - 1)
        for block in partition:
            term = term * principal_minor(m, block)
        total = normalize(total + term)
    c = cycle_weight_sum(_cycles(m, cycles, len(u)), u)
    expected = normalize((-1) ** (len(u) - 1) * c)
    require(compare("cumulant=cycles", total, expected, tol, scale=abs(float(expected)),
                    context={"u": list(u)}))
    return total


def cycle_partition_identity(a: GraphLike, u: Sequence[int],
                             cycles: Optional[List[SimpleCycle]] = None) -> Tuple[Number, Number]:
    """det(−A_uu) and Σ over set partitions of u of (−1)^#blocks ∏ c(block)."""
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    cycles = _cycles(m, cycles, len(u))
    lhs = determinant(-submatrix(m.values(), u, u))
    rhs = 0
    for partition in set_partitions(u):
        term = (-1) ** len(partition)
        for block in partition:
            term = term * cycle_weight_sum(cycles, block)
        rhs = normalize(rhs + term)
    return lhs, rhs


def _polynomial_expectation(m: SymmetricMatrix, u: Sequence[int], f: Polynomial) -> Number:
    """E ∏_{i∈u} f(X_i), expanded into generalized moments."""
    total = 0
    for exps in itertools.product(range(f.degree + 1), repeat=len(u)):
        coeff = 1
        for e in exps:
            coeff = coeff * f.coefficients[e]
        if coeff == 0:
            continue
        index = index_on(m.n, dict(zip(u, exps)))
        total = normalize(total + coeff * generalized_moment(m, index))
    return total


def analytic_minor(a: GraphLike, u: Sequence[int], f: Polynomial) -> Tuple[Number, Number]:
    """(det f(A)_uu, E ∏_{i∈u} f(X_i))."""
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    fa = f.of_matrix(m)
    lhs = determinant(submatrix(fa, u, u))
    return lhs, _polynomial_expectation(m, u, f)


def trace_identity(a: GraphLike, u: Sequence[int], f: Polynomial) -> Tuple[Number, Number]:
    """(tr f(A)_uu, E Σ_{i∈u} f(X_i))."""
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    fa = f.of_matrix(m)
    lhs = normalize(sum(fa[i, i] for i in u))
    rhs = 0
    for i in u:
        for e, c in enumerate(f.coefficients):
            if c != 0:
                rhs = normalize(rhs + c * generalized_moment(m, index_on(m.n, {i: e})))
    return lhs, rhs


def submatrix_charpoly(a: GraphLike, u: Sequence[int], f: Polynomial,
                       tol: float = IDENTITY_TOL) -> Polynomial:
    """Coefficients (lowest first) of z ↦ E ∏_{i∈u}(z − f(X_i)), checked
    against det(zI − f(A)_uu).
    """
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    p = len(u)
    coeffs: List[Number] = [0] * (p + 1)
    for size in range(p + 1):
        for subset in itertools.combinations(u, size):
            value = _polynomial_expectation(m, subset, f) if subset else 1
            coeffs[p - size] = normalize(coeffs[p - size] + (-1) ** size * value)

    fa = f.of_matrix(m)
    block = submatrix(fa, u, u)
    direct = [normalize(c) for c in exact_charpoly(block)]
    if not (m.integral and all(isinstance(c, (int, Fraction)) for c in f.coefficients)):
        direct = [float(c) for c in direct]
    for power, (lhs, rhs) in enumerate(zip(coeffs, direct)):
        require(compare("charpoly", lhs, rhs, tol, scale=abs(float(rhs)),
                        context={"u": list(u), "power": power}))
    return Polynomial.of(coeffs)


def resolvent_moment_series(a: GraphLike, u: Sequence[int], degree: int) -> TruncatedSeries:
    """E ∏_{i∈u} (1 − zX_i)⁻¹: coefficient d sums m[k] over |k| = d supported on u."""
    m = as_matrix(a)
    u = validate_subset(m.n, u)
    coeffs: List[Number] = []
    for d in range(degree + 1):
        total = 0
        for combo in itertools.combinations_with_replacement(u, d):
            exps: dict = {}
            for i in combo:
                exps[i] = exps.get(i, 0) + 1
            total = normalize(total + generalized_moment(m, index_on(m.n, exps)))
        coeffs.append(total)
    return TruncatedSeries.of(coeffs, degree)

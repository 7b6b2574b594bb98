"""Slater determinants as marginals of the joint spectral measure (simple spectrum)."""

import itertools
import logging
from typing import Optional, Sequence

import numpy as np

from ..checks import compare, require
from ..errors import DomainError
from ..linalg.eigen import EigenSystem
from ..linalg.exact import permutation_sign
from ..linalg.matrix import submatrix, validate_subset
from .measure import SignedMeasure, build_measure

logger = logging.getLogger(__name__)

SLATER_TOL = 1e-8


def _require_simple(eig: EigenSystem) -> None:
    if not eig.simple_spectrum:
        raise DomainError(
            f"eigenvalues must be distinct; repeated classes {list(eig.repeated_classes)}"
        )


def _slater(eig: EigenSystem, u: Sequence[int], v: Sequence[int]) -> float:
    if not u:
        return 1.0
    return float(np.linalg.det(submatrix(eig.basis, u, v)))


def slater_probability(eig: EigenSystem, u: Sequence[int], v: Sequence[int],
                       measure: Optional[SignedMeasure] = None, tol: float = SLATER_TOL) -> float:
    """P({X_i : i∈u} = {λ_j : j∈v}) from the atoms, checked against det(P_uv)².

    Raises:
        DomainError: repeated eigenvalues, or |u| ≠ |v|.
    """
    _require_simple(eig)
    u = validate_subset(eig.n, u)
    v = validate_subset(eig.n, v)
    if len(u) != len(v):
        raise DomainError(f"|u| = {len(u)} but |v| = {len(v)}")
    measure = measure or build_measure(eig)
    target = frozenset(v)
    prob = float(sum(a.weight for a in measure.atoms if frozenset(a.classes[i] for i in u) == target))
    closed = _slater(eig, u, v) ** 2
    require(compare("slater", prob, closed, tol, context={"u": list(u), "v": list(v)}))
    return prob


def slater_completeness(eig: EigenSystem, u: Sequence[int]) -> float:
    """Σ_{|v|=|u|} det(P_uv)², which is 1 by Cauchy–Binet."""
    u = validate_subset(eig.n, u)
    return float(sum(_slater(eig, u, v) ** 2 for v in itertools.combinations(range(eig.n), len(u))))


def multivariate_marginal(eig: EigenSystem, s: Sequence[int], t: Sequence[int], sigma: Sequence[int],
                          measure: Optional[SignedMeasure] = None, tol: float = SLATER_TOL) -> float:
    """P(X_{s_j} = λ_{t_σ(j)} for all j), checked against
    ε(σ)·det(P_st)·∏_j p_{s_j t_σ(j)}.
    """
    _require_simple(eig)
    s = validate_subset(eig.n, s)
    t = validate_subset(eig.n, t)
    k = len(s)
    if len(t) != k:
        raise DomainError(f"|s| = {k} but |t| = {len(t)}")
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(k)):
        raise DomainError(f"sigma must be a permutation of 0..{k - 1}, got {sigma}")
    measure = measure or build_measure(eig)
    wanted = tuple(t[sigma[j]] for j in range(k))
    prob = float(sum(a.weight for a in measure.atoms if tuple(a.classes[i] for i in s) == wanted))
    closed = permutation_sign(sigma) * _slater(eig, s, t)
    for j in range(k):
        closed *= eig.basis[s[j], t[sigma[j]]]
    require(compare("multivariate-marginal", prob, float(closed), tol,
                    context={"s": list(s), "t": list(t), "sigma": list(sigma)}))
    return prob

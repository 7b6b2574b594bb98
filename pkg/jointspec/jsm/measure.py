"""The joint spectral measure: a signed measure on permuted eigenvalue vectors."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import CapExceededError, DomainError, SpectralError
from ..linalg.eigen import EigenSystem

logger = logging.getLogger(__name__)

DEFAULT_MEASURE_CAP = 9
MASS_TOL = 1e-10
# Atoms lighter than this are numerically zero and dropped
ZERO_WEIGHT = 1e-13


@dataclass(frozen=True)
class Atom:
    """A support point λ_σ with its signed weight.

    `classes` holds the eigenvalue-class id of every coordinate and is the
    atom's identity; `point` holds the float coordinates.
    """
    point: Tuple[float, ...]
    classes: Tuple[int, ...]
    weight: float


@dataclass(frozen=True)
class SignedMeasure:
    """Finite signed measure with total mass 1."""
    atoms: Tuple[Atom, ...]
    n: int

    @property
    def total_mass(self) -> float:
        return float(sum(a.weight for a in self.atoms))

    @property
    def total_variation(self) -> float:
        return float(sum(abs(a.weight) for a in self.atoms))

    def weights_by_class(self) -> Dict[Tuple[int, ...], float]:
        return {a.classes: a.weight for a in self.atoms}

    def points(self) -> np.ndarray:
        return np.array([a.point for a in self.atoms], dtype=float).reshape(len(self.atoms), self.n)

    def weights(self) -> np.ndarray:
        return np.array([a.weight for a in self.atoms], dtype=float)


def _permutation_signs(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    inversions = np.zeros(perms.shape[0], dtype=np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            inversions += perms[:, a] > perms[:, b]
    return np.where(inversions % 2 == 0, 1.0, -1.0)


def build_measure(eig: EigenSystem, cap: int = DEFAULT_MEASURE_CAP) -> SignedMeasure:
    """Push π(σ) = ε(σ)∏_j p_{jσ(j)} forward along σ ↦ λ_σ.

    Permutations giving the same class vector are merged, so repeated
    eigenvalues yield one atom per distinct point.

    Raises:
        CapExceededError: n above the S_N enumeration cap.
    """
    n = eig.n
    if n > cap:
        raise CapExceededError("measure dimension n", n, cap)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    weights = _permutation_signs(perms) * np.prod(eig.basis[np.arange(n), perms], axis=1)
    class_of = np.array(eig.class_of, dtype=np.int64)
    keys = class_of[perms]

    unique_keys, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    grouped = np.bincount(inverse.reshape(-1), weights=weights, minlength=unique_keys.shape[0])

    atoms = []
    for row, start, w in zip(unique_keys, first, grouped):
        if abs(w) <= ZERO_WEIGHT:
            continue
        point = tuple(float(x) for x in eig.eigenvalues[perms[start]])
        atoms.append(Atom(point=point, classes=tuple(int(c) for c in row), weight=float(w)))
    measure = SignedMeasure(atoms=tuple(atoms), n=n)

    if abs(measure.total_mass - 1.0) > MASS_TOL:
        raise SpectralError(f"joint spectral measure has total mass {measure.total_mass!r}")
    logger.debug(f"Built measure: n={n}, {len(perms)} permutations, {len(atoms)} atoms")
    return measure


def _check_index(measure: SignedMeasure, k: Sequence[int]) -> np.ndarray:
    k = np.asarray(k, dtype=np.int64)
    if k.shape != (measure.n,):
        raise DomainError(f"multi-index has {k.size} components, measure has dimension {measure.n}")
    if np.any(k < 0):
        raise DomainError(f"multi-index components must be >= 0, got {tuple(k)}")
    return k


def moment_oracle(measure: SignedMeasure, k: Sequence[int]) -> float:
    """∫ ∏ x_i^{k_i} dμ as the weighted sum over atoms."""
    k = _check_index(measure, k)
    points = measure.points()
    if points.size == 0:
        return 0.0
    return float(np.sum(measure.weights() * np.prod(points ** k, axis=1)))


def moment_scale(measure: SignedMeasure, k: Sequence[int]) -> float:
    """Σ |w|·∏|x_i|^{k_i}, the magnitude float round-off in moment_oracle scales with."""
    k = _check_index(measure, k)
    points = measure.points()
    if points.size == 0:
        return 0.0
    return float(np.sum(np.abs(measure.weights()) * np.prod(np.abs(points) ** k, axis=1)))


def rooted_spectral_measure(eig: EigenSystem, i: int) -> List[Tuple[float, float]]:
    """μ_i = Σ_k p_ik² δ_{λ_k}, one (eigenvalue, weight) per eigenvalue class."""
    if not 0 <= i < eig.n:
        raise DomainError(f"vertex {i} out of range for dimension {eig.n}")
    out = []
    for members in eig.classes:
        weight = float(sum(eig.basis[i, j] ** 2 for j in members))
        value = float(np.mean([eig.eigenvalues[j] for j in members]))
        out.append((value, weight))
    return out


def marginal_distribution(measure: SignedMeasure, i: int) -> Dict[int, float]:
    """Law of X_i under μ keyed by eigenvalue class id."""
    out: Dict[int, float] = {}
    for atom in measure.atoms:
        c = atom.classes[i]
        out[c] = out.get(c, 0.0) + atom.weight
    return out

"""Independence of μ from the choice of eigenbasis inside repeated eigenspaces."""

import logging
from typing import Optional, Tuple

import numpy as np

from ..checks import compare, require
from ..graphs.graph import GraphLike, as_matrix
from ..linalg.eigen import EigenSystem, eigendecompose
from ..linalg.exact import RationalMatrix
from ..models import BasisIndependenceReport
from .measure import SignedMeasure, build_measure

logger = logging.getLogger(__name__)

BASIS_TOL = 1e-8


def hadamard_lemma(m: RationalMatrix, b: RationalMatrix, c: RationalMatrix) -> Tuple[RationalMatrix, RationalMatrix]:
    """((MB)⊙C, (M⊙C)B); equal whenever C is block-diagonal all-ones and B
    is supported on C.
    """
    return (m @ b).hadamard(c), m.hadamard(c) @ b


def class_rotation(eig: EigenSystem, rng: np.random.Generator, angle_scale: float = np.pi) -> np.ndarray:
    """Random block-diagonal rotation acting inside each eigenvalue class.

    Built from Givens rotations, so it is orthogonal with determinant +1
    and commutes with diag(λ).
    """
    rot = np.eye(eig.n)
    for members in eig.repeated_classes:
        for a_pos in range(len(members)):
            for b_pos in range(a_pos + 1, len(members)):
                p, q = members[a_pos], members[b_pos]
                theta = rng.uniform(-angle_scale, angle_scale)
                g = np.eye(eig.n)
                g[p, p] = g[q, q] = np.cos(theta)
                g[p, q] = -np.sin(theta)
                g[q, p] = np.sin(theta)
                rot = rot @ g
    return rot


def measure_deviation(first: SignedMeasure, second: SignedMeasure) -> float:
    """Largest atom-weight difference, matching atoms by class vector."""
    w1 = first.weights_by_class()
    w2 = second.weights_by_class()
    keys = set(w1) | set(w2)
    return max((abs(w1.get(k, 0.0) - w2.get(k, 0.0)) for k in keys), default=0.0)


def basis_independence_check(a: GraphLike, trials: int, seed: int, tol: float = BASIS_TOL,
                             eig: Optional[EigenSystem] = None) -> BasisIndependenceReport:
    """Rotate the eigenbasis inside repeated classes and compare the rebuilt μ."""
    m = as_matrix(a)
    eig = eig or eigendecompose(m)
    if not eig.repeated_classes:
        logger.info("Basis independence skipped: spectrum is simple")
        return BasisIndependenceReport(skipped=True)
    reference = build_measure(eig)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for trial in range(trials):
        rotated = eig.with_basis(eig.basis @ class_rotation(eig, rng))
        deviation = measure_deviation(reference, build_measure(rotated))
        require(compare("basis-independence", deviation, 0.0, tol, context={"trial": trial, "seed": seed}))
        worst = max(worst, deviation)
    logger.debug(f"Basis independence: {trials} trials, max deviation {worst:.3e}")
    return BasisIndependenceReport(
        trials=trials,
        max_deviation=worst,
        repeated_classes=[list(c) for c in eig.repeated_classes],
    )

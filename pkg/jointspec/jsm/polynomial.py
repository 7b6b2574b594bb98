"""Polynomials f(x) = Σ γ_k x^k and their matrix values f(A)."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..errors import DomainError
from ..hikes.series import Number, normalize
from ..linalg.matrix import MatrixInput, as_values, power_table


@dataclass(frozen=True)
class Polynomial:
    """Coefficients γ_0…γ_L, lowest degree first."""
    coefficients: Tuple[Number, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise DomainError("polynomial needs at least one coefficient")

    @classmethod
    def of(cls, values: Sequence[Number]) -> "Polynomial":
        return cls(tuple(normalize(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def of_matrix(self, a: MatrixInput) -> np.ndarray:
        """f(A) = Σ γ_k A^k; exact when A and the γ_k are."""
        base = as_values(a)
        powers = power_table(base, self.degree)
        out = powers[0] * self.coefficients[0]
        for k in range(1, self.degree + 1):
            out = out + powers[k] * self.coefficients[k]
        return out

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            terms.append(str(c) if k == 0 else f"{c}*x^{k}")
        return " + ".join(terms) if terms else "0"

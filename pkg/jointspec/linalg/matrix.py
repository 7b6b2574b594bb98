"""Symmetric matrices, matrix powers and column mixing.

Integral matrices are carried exactly as numpy object arrays of Python ints;
everything else is float64.
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Union

import numpy as np

from ..errors import DomainError

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """A real symmetric n×n matrix; symmetry is enforced at construction."""
    entries: np.ndarray
    integral: bool

    @classmethod
    def from_array(cls, values, tol: float = SYMMETRY_TOL) -> "SymmetricMatrix":
        arr = np.array(values, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DomainError(f"expected a non-empty square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(arr))))
        asymmetry = float(np.max(np.abs(arr - arr.T)))
        if asymmetry > tol * scale:
            raise DomainError(f"matrix is not symmetric (max asymmetry {asymmetry:.3e})")
        sym = np.triu(arr) + np.triu(arr, 1).T
        sym.setflags(write=False)
        integral = bool(np.all(sym == np.round(sym)))
        return cls(entries=sym, integral=integral)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))

    def exact(self) -> np.ndarray:
        """Object array of Python ints; only defined for integral matrices."""
        if not self.integral:
            raise DomainError("exact entries are only available for integer matrices")
        return to_exact(self.entries)

    def values(self) -> np.ndarray:
        """Exact entries when integral, float entries otherwise."""
        return self.exact() if self.integral else np.array(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())


MatrixInput = Union[SymmetricMatrix, np.ndarray]


def to_exact(arr: np.ndarray) -> np.ndarray:
    """Integral float array → object array of Python ints."""
    out = np.empty(arr.shape, dtype=object)
    for index in np.ndindex(arr.shape):
        out[index] = int(round(float(arr[index])))
    return out


def exact_identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def as_values(a: MatrixInput) -> np.ndarray:
    """Working array of a matrix: exact for integral SymmetricMatrix."""
    if isinstance(a, SymmetricMatrix):
        return a.values()
    return np.asarray(a)


def is_exact_array(arr: np.ndarray) -> bool:
    return arr.dtype == object


def identity_like(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    return exact_identity(n) if is_exact_array(arr) else np.eye(n)


def matrix_power(a: MatrixInput, k: int) -> np.ndarray:
    """A^k by repeated squaring, with A^0 = I."""
    if k < 0:
        raise DomainError(f"matrix power needs k >= 0, got {k}")
    base = as_values(a)
    result = identity_like(base)
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def power_table(a: MatrixInput, kmax: int) -> Dict[int, np.ndarray]:
    """{k: A^k} for k = 0..kmax by successive multiplication."""
    base = as_values(a)
    table = {0: identity_like(base)}
    for k in range(1, kmax + 1):
        table[k] = table[k - 1] @ base
    return table


def column_mix(a: MatrixInput, k: Sequence[int]) -> np.ndarray:
    """A[k_1,…,k_n]: column i is column i of A^{k_i}."""
    base = as_values(a)
    n = base.shape[0]
    if len(k) != n:
        raise DomainError(f"multi-index has {len(k)} components, matrix has dimension {n}")
    if any(int(x) < 0 for x in k):
        raise DomainError(f"multi-index components must be >= 0, got {tuple(k)}")
    powers = power_table(base, max(k) if n else 0)
    out = np.empty_like(base)
    for i, ki in enumerate(k):
        out[:, i] = powers[int(ki)][:, i]
    return out


def submatrix(arr: np.ndarray, rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
    return np.asarray(arr)[np.ix_(list(rows), list(cols))]


def complement(n: int, subset: Sequence[int]) -> list:
    chosen = set(subset)
    return [i for i in range(n) if i not in chosen]


def validate_subset(n: int, subset: Sequence[int], *, proper: bool = False, nonempty: bool = True) -> tuple:
    """Check a vertex subset and return it as a tuple (order preserved)."""
    subset = tuple(int(i) for i in subset)
    if nonempty and not subset:
        raise DomainError("vertex subset must be nonempty")
    if len(set(subset)) != len(subset):
        raise DomainError(f"vertex subset has repeated vertices: {subset}")
    if any(i < 0 or i >= n for i in subset):
        raise DomainError(f"vertex subset {subset} out of range for dimension {n}")
    if proper and len(subset) == n:
        raise DomainError("vertex subset must be a proper subset")
    return subset

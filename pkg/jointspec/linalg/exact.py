"""Exact rational matrices: fraction-free determinants and inverses."""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError

MatrixLike = Union["RationalMatrix", np.ndarray, Sequence[Sequence]]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return Fraction(float(value))
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Matrix of exact rationals, stored row by row."""
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.rows or any(len(r) != len(self.rows[0]) for r in self.rows):
            raise DomainError("RationalMatrix needs a non-empty rectangular array")

    @classmethod
    def from_rows(cls, rows: MatrixLike) -> "RationalMatrix":
        if isinstance(rows, RationalMatrix):
            return rows
        return cls(tuple(tuple(_to_fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape[1] != other.shape[0]:
            raise DomainError("Cannot multiply incompatible matrices")
        cols = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.rows
        ))

    def hadamard(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DomainError("Hadamard product needs equal shapes")
        return RationalMatrix(tuple(
            tuple(a * b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        ))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)))

    def to_array(self) -> np.ndarray:
        """Object array of Fractions."""
        out = np.empty(self.shape, dtype=object)
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                out[i, j] = x
        return out


def _square_rows(m: MatrixLike) -> List[List[Fraction]]:
    rm = RationalMatrix.from_rows(m)
    if not rm.is_square:
        raise DomainError(f"determinant needs a square matrix, got {rm.shape}")
    return [list(row) for row in rm.rows]


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def exact_determinant(m: MatrixLike) -> Fraction:
    """Exact determinant; rows are scaled to integers, then Bareiss."""
    rows = _square_rows(m)
    scale = 1
    integer_rows = []
    for row in rows:
        row_lcm = lcm(*(x.denominator for x in row)) if row else 1
        scale *= row_lcm
        integer_rows.append([int(x * row_lcm) for x in row])
    return Fraction(bareiss_determinant(integer_rows), scale)


def exact_inverse(m: MatrixLike) -> RationalMatrix:
    """Gauss-Jordan inverse over the rationals."""
    a = _square_rows(m)
    n = len(a)
    b = [list(row) for row in RationalMatrix.identity(n).rows]
    for i in range(n):
        k = next((r for r in range(i, n) if a[r][i] != 0), None)
        if k is None:
            raise DomainError("matrix is singular")
        if k != i:
            a[i], a[k] = a[k], a[i]
            b[i], b[k] = b[k], b[i]
        inv = 1 / a[i][i]
        a[i] = [x * inv for x in a[i]]
        b[i] = [x * inv for x in b[i]]
        for j in range(n):
            if j == i or a[j][i] == 0:
                continue
            d = a[j][i]
            a[j] = [t - r * d for t, r in zip(a[j], a[i])]
            b[j] = [t - r * d for t, r in zip(b[j], b[i])]
    return RationalMatrix(tuple(tuple(row) for row in b))


def permutation_sign(perm: Sequence[int]) -> int:
    """Signature of a permutation of 0..n-1 (cycle decomposition)."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_determinant(m: MatrixLike) -> Fraction:
    """Permutation-sum determinant; an independent oracle for small n."""
    rows = _square_rows(m)
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if term == 0:
                break
        total += term
    return total


def exact_charpoly(m: MatrixLike) -> List[Fraction]:
    """Coefficients c_0..c_n of det(λI − M) by Faddeev–LeVerrier."""
    a = RationalMatrix.from_rows(m)
    if not a.is_square:
        raise DomainError("characteristic polynomial needs a square matrix")
    n = a.shape[0]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = RationalMatrix.identity(n)
    mk = RationalMatrix(tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n)))
    for k in range(1, n + 1):
        am = a @ mk
        c_prev = coeffs[n - k + 1]
        mk = RationalMatrix(tuple(
            tuple(am[i, j] + (c_prev if i == j else 0) for j in range(n)) for i in range(n)
        ))
        trace = sum(((a @ mk)[i, i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return coeffs


def as_fraction_array(values: Iterable) -> np.ndarray:
    """Object array of Fractions from any nested numeric array."""
    arr = np.asarray(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for index in np.ndindex(arr.shape):
        out[index] = _to_fraction(arr[index])
    return out

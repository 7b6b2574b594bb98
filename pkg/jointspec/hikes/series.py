"""Truncated power series in z with scalar or matrix coefficients.

Coefficients stay exact (int / Fraction) as long as every input is exact;
any float input switches the series to floating point.
"""

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError
from ..linalg.exact import exact_inverse
from ..linalg.matrix import exact_identity, is_exact_array, power_table

Number = Union[int, Fraction, float]


def normalize(x):
    """Fractions with denominator 1 become ints; numpy scalars become Python scalars."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    return x


def divide(a, b):
    if isinstance(a, numbers.Rational) and isinstance(b, numbers.Rational):
        return normalize(Fraction(a) / Fraction(b))
    return a / b


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 z + … + c_L z^L, closed under arithmetic at degree L."""
    coefficients: Tuple[Number, ...]

    @classmethod
    def of(cls, values: Iterable[Number], degree: int) -> "TruncatedSeries":
        """Pad with zeros or truncate to the given degree."""
        coeffs = [normalize(v) for v in values][: degree + 1]
        coeffs += [0] * (degree + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: Number, degree: int) -> "TruncatedSeries":
        return cls.of([value], degree)

    @classmethod
    def monomial(cls, power: int, degree: int, value: Number = 1) -> "TruncatedSeries":
        return cls.of([0] * power + [value], degree)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, numbers.Rational) for c in self.coefficients)

    def __getitem__(self, k: int) -> Number:
        return self.coefficients[k] if 0 <= k <= self.degree else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.degree != self.degree:
                raise DomainError(f"series degrees differ: {self.degree} vs {other.degree}")
            return other
        return TruncatedSeries.constant(other, self.degree)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        return TruncatedSeries(tuple(normalize(a + b) for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(normalize(c * other) for c in self.coefficients))
        other = self._coerce(other)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(self.degree + 1):
            out.append(normalize(sum(a[j] * b[k - j] for j in range(k + 1))))
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs c_0 ≠ 0."""
        c = self.coefficients
        if c[0] == 0:
            raise DomainError("series with zero constant term has no inverse")
        inv0 = divide(1, c[0])
        out = [inv0]
        for k in range(1, self.degree + 1):
            acc = sum(c[j] * out[k - j] for j in range(1, k + 1))
            out.append(normalize(-inv0 * acc))
        return TruncatedSeries(tuple(out))

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return TruncatedSeries(tuple(divide(c, other) for c in self.coefficients))

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; needs c_0 = 1."""
        f = self.coefficients
        if f[0] != 1:
            raise DomainError(f"formal log needs constant term 1, got {f[0]}")
        g: List[Number] = [0]
        for k in range(1, self.degree + 1):
            acc = sum(j * g[j] * f[k - j] for j in range(1, k))
            g.append(normalize(f[k] - divide(acc, k)))
        return TruncatedSeries(tuple(g))

    def truncate(self, degree: int) -> "TruncatedSeries":
        return TruncatedSeries.of(self.coefficients, degree)

    def to_floats(self) -> Tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(f"{c}{'*' if power else ''}{power}")
        return " + ".join(terms) if terms else "0"


def _zero_like(arr: np.ndarray) -> np.ndarray:
    if is_exact_array(arr):
        out = np.empty(arr.shape, dtype=object)
        out.fill(0)
        return out
    return np.zeros(arr.shape)


def _normalize_array(arr: np.ndarray) -> np.ndarray:
    if not is_exact_array(arr):
        return arr
    out = np.empty(arr.shape, dtype=object)
    for index in np.ndindex(arr.shape):
        out[index] = normalize(arr[index])
    return out


@dataclass(frozen=True, eq=False)
class MatrixSeries:
    """Σ_k C_k z^k with square matrix coefficients C_0…C_L."""
    coefficients: Tuple[np.ndarray, ...]

    @classmethod
    def of(cls, matrices: Sequence[np.ndarray], degree: int) -> "MatrixSeries":
        mats = [np.asarray(m) for m in matrices][: degree + 1]
        if not mats:
            raise DomainError("matrix series needs at least one coefficient")
        while len(mats) < degree + 1:
            mats.append(_zero_like(mats[0]))
        return cls(tuple(_normalize_array(m) for m in mats))

    @classmethod
    def identity(cls, n: int, degree: int) -> "MatrixSeries":
        return cls.of([exact_identity(n)], degree)

    @classmethod
    def geometric(cls, a: np.ndarray, degree: int) -> "MatrixSeries":
        """(I − zA)⁻¹ = Σ z^k A^k."""
        table = power_table(np.asarray(a), degree)
        return cls(tuple(table[k] for k in range(degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def shape(self) -> Tuple[int, int]:
        return self.coefficients[0].shape

    @property
    def exact(self) -> bool:
        return all(is_exact_array(c) for c in self.coefficients)

    def __getitem__(self, k: int) -> np.ndarray:
        return self.coefficients[k]

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return TruncatedSeries(tuple(normalize(c[i, j]) for c in self.coefficients))

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixSeries":
        ix = np.ix_(list(rows), list(cols))
        return MatrixSeries(tuple(c[ix] for c in self.coefficients))

    def trace(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(normalize(np.trace(c)) for c in self.coefficients))

    def __add__(self, other: "MatrixSeries") -> "MatrixSeries":
        return MatrixSeries(tuple(_normalize_array(a + b) for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "MatrixSeries":
        return MatrixSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "MatrixSeries") -> "MatrixSeries":
        return self + (-other)

    def __matmul__(self, other: "MatrixSeries") -> "MatrixSeries":
        out = []
        for k in range(self.degree + 1):
            acc = self.coefficients[0] @ other.coefficients[k]
            for j in range(1, k + 1):
                acc = acc + self.coefficients[j] @ other.coefficients[k - j]
            out.append(_normalize_array(acc))
        return MatrixSeries(tuple(out))

    def scale(self, factor: Number) -> "MatrixSeries":
        return MatrixSeries(tuple(_normalize_array(c * factor) for c in self.coefficients))

    def shift(self, power: int = 1) -> "MatrixSeries":
        """Multiply by z^power, dropping what falls beyond the degree."""
        zero = _zero_like(self.coefficients[0])
        mats = [zero] * power + list(self.coefficients)
        return MatrixSeries(tuple(mats[: self.degree + 1]))

    def inverse(self) -> "MatrixSeries":
        """Inverse series; needs an invertible constant matrix C_0."""
        c0 = self.coefficients[0]
        n = c0.shape[0]
        if is_exact_array(c0):
            if all(c0[i, j] == (1 if i == j else 0) for i in range(n) for j in range(n)):
                inv0 = exact_identity(n)
            else:
                inv0 = _normalize_array(exact_inverse(c0).to_array())
        else:
            try:
                inv0 = np.linalg.inv(c0)
            except np.linalg.LinAlgError as e:
                raise DomainError("constant term of the matrix series is singular") from e
        out = [inv0]
        for k in range(1, self.degree + 1):
            acc = self.coefficients[1] @ out[k - 1]
            for j in range(2, k + 1):
                acc = acc + self.coefficients[j] @ out[k - j]
            out.append(_normalize_array(-(inv0 @ acc)))
        return MatrixSeries(tuple(out))

    def determinant(self) -> TruncatedSeries:
        """Determinant by Gaussian elimination over the series ring."""
        n = self.shape[0]
        rows = [[self.entry(i, j) for j in range(n)] for i in range(n)]
        det = TruncatedSeries.constant(1, self.degree)
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col][0] != 0), None)
            if pivot is None:
                raise DomainError("no pivot with nonzero constant term; determinant needs an invertible C_0")
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            p = rows[col][col]
            det = det * p
            p_inv = p.inverse()
            for r in range(col + 1, n):
                factor = rows[r][col] * p_inv
                if all(c == 0 for c in factor.coefficients):
                    continue
                rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(n)]
        return det

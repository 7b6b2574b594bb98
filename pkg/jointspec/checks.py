"""Building and enforcing identity checks.

Exact values (int, Fraction, numpy integers) are compared exactly; anything
else is compared in floating point against ``tol * max(1, scale)``.
"""

import logging
import math
import numbers
from fractions import Fraction
from typing import Any, Dict, Optional, Union

import numpy as np

from .errors import IdentityViolation
from .models import Check

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, float]


def is_exact(value: Any) -> bool:
    """True for Python/numpy integers and Fractions."""
    return isinstance(value, numbers.Rational)


def to_float(value: Any) -> float:
    return float(value)


def compare(
    name: str,
    lhs: Any,
    rhs: Any,
    tol: float = 0.0,
    *,
    scale: float = 1.0,
    context: Optional[Dict[str, Any]] = None,
) -> Check:
    """Compare two scalars and return the resulting Check."""
    exact = is_exact(lhs) and is_exact(rhs)
    if exact:
        gap = abs(Fraction(lhs) - Fraction(rhs))
        passed = gap == 0
        effective_tol = 0.0
        abs_gap = float(gap)
    else:
        abs_gap = abs(float(lhs) - float(rhs))
        effective_tol = tol * max(1.0, float(scale))
        passed = math.isfinite(abs_gap) and abs_gap <= effective_tol
    return Check(
        name=name,
        lhs=to_float(lhs),
        rhs=to_float(rhs),
        abs_gap=abs_gap,
        tol=effective_tol,
        passed=passed,
        exact=exact,
        context=context or {},
    )


def compare_arrays(
    name: str,
    lhs: np.ndarray,
    rhs: np.ndarray,
    tol: float = 0.0,
    *,
    scale: float = 1.0,
    context: Optional[Dict[str, Any]] = None,
) -> Check:
    """Entry-wise comparison; reports the entry with the largest gap."""
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    if lhs.shape != rhs.shape:
        raise ValueError(f"shape mismatch in '{name}': {lhs.shape} vs {rhs.shape}")
    worst: Optional[Check] = None
    for index in np.ndindex(lhs.shape):
        check = compare(name, lhs[index], rhs[index], tol, scale=scale)
        if worst is None or (not check.passed and worst.passed) or (
            check.passed == worst.passed and check.abs_gap > worst.abs_gap
        ):
            worst = check
            worst_index = index
    if worst is None:
        return Check(name=name, lhs=0.0, rhs=0.0, abs_gap=0.0, tol=tol, passed=True, exact=True,
                     context=context or {})
    ctx = dict(context or {})
    ctx["entry"] = [int(i) for i in worst_index]
    return worst.model_copy(update={"context": ctx})


def require(check: Check) -> Check:
    """Raise IdentityViolation when the check failed, else return it."""
    if not check.passed:
        logger.debug(f"Check failed: {check.name} lhs={check.lhs} rhs={check.rhs} gap={check.abs_gap}")
        raise IdentityViolation(check)
    return check

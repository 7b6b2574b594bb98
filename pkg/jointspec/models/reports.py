"""Report models emitted by identity checks and commands."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class Check(BaseModel):
    """One verified identity: both sides, their gap, and replay context."""
    name: str
    lhs: float
    rhs: float
    abs_gap: float
    tol: float
    passed: bool
    exact: bool = False
    context: Dict[str, Any] = Field(default_factory=dict)


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""
    suite: str
    checks: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: Optional[Check] = None
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0


class ConvergenceRow(BaseModel):
    """One n of a scaled-moment convergence table."""
    n: int
    scaled_moment: float
    limit_moment: float
    gap: float


class ConvergenceReport(BaseModel):
    """Scaled moments of a star product against their limit."""
    merge_set: List[int]
    k: List[int]
    rows: List[ConvergenceRow]
    slope: Optional[float] = None
    final_gap_ok: bool = True
    monotone_ok: bool = True
    slope_ok: bool = True
    odd: bool = False
    rate_bound: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.final_gap_ok and self.monotone_ok and self.slope_ok


class MarginalRow(BaseModel):
    """E(X_i^k) by both moment paths against the closed-walk count."""
    k: int
    closed_walks: float
    determinant_moment: float
    oracle_moment: Optional[float] = None


class MarginalReport(BaseModel):
    """Result of a marginal check at one vertex."""
    vertex: int
    rows: List[MarginalRow]
    max_deviation: float


class BasisIndependenceReport(BaseModel):
    """Result of the in-class rotation experiment."""
    skipped: bool = False
    trials: int = 0
    max_deviation: float = 0.0
    repeated_classes: List[List[int]] = Field(default_factory=list)

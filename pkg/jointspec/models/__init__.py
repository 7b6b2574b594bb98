"""Data models for jointspec."""

from .config import (
    RunConfig,
    CliOverrides,
    ToleranceConfig,
    CapsConfig,
    LoggingConfig,
)
from .reports import (
    Check,
    SuiteResult,
    ConvergenceRow,
    ConvergenceReport,
    MarginalRow,
    MarginalReport,
    BasisIndependenceReport,
)

__all__ = [
    "RunConfig",
    "CliOverrides",
    "ToleranceConfig",
    "CapsConfig",
    "LoggingConfig",
    "Check",
    "SuiteResult",
    "ConvergenceRow",
    "ConvergenceReport",
    "MarginalRow",
    "MarginalReport",
    "BasisIndependenceReport",
]

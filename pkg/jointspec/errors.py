"""Exception hierarchy shared by every module."""

from typing import Any, Optional


class SpectralError(Exception):
    """Base class for all errors raised by jointspec."""


class DomainError(SpectralError, ValueError):
    """Arguments outside the domain of an operation."""


class CapExceededError(DomainError):
    """A brute-force size cap would be exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} = {value} exceeds cap {cap}")


class ConvergenceError(SpectralError):
    """An iterative method ran out of its iteration budget."""


class IdentityViolation(SpectralError):
    """A verified identity failed; carries the failing check for replay."""

    def __init__(self, check: Any):
        self.check = check
        super().__init__(
            f"identity '{check.name}' violated: lhs={check.lhs!r} rhs={check.rhs!r} "
            f"gap={check.abs_gap:.3e} tol={check.tol:.1e}"
        )


class GraphParseError(SpectralError):
    """Malformed graph file."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())

"""Identity suites behind the `verify` command."""

from .context import SuiteContext, guarded, with_replay
from .runner import SuiteRun, checks_to_csv, render, resolve_suites, run_suite, run_suites
from .suites import SUITES

__all__ = [
    "SuiteContext",
    "guarded",
    "with_replay",
    "SuiteRun",
    "checks_to_csv",
    "render",
    "resolve_suites",
    "run_suite",
    "run_suites",
    "SUITES",
]

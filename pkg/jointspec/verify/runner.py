"""Run identity suites and render their reports."""

import csv
import io
import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from ..errors import DomainError
from ..graphs.graph import WeightedGraph
from ..models import Check, RunConfig, SuiteResult
from .context import SuiteContext
from .suites import SUITES

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("name", "lhs", "rhs", "abs_gap", "tol", "pass")


@dataclass
class SuiteRun:
    """A suite's summary together with every check it produced."""
    result: SuiteResult
    checks: List[Check]


def resolve_suites(names: Optional[Sequence[str]]) -> List[str]:
    """Validate --suite names; None selects every suite in registry order."""
    if not names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s) {', '.join(unknown)} (choose from {', '.join(SUITES)})")
    return [n for n in SUITES if n in names]


def run_suite(name: str, config: RunConfig, graph: Optional[WeightedGraph] = None) -> SuiteRun:
    index = list(SUITES).index(name)
    ctx = SuiteContext(config=config, suite_index=index, graph=graph)
    logger.info(f"Running suite {name}")
    start = time.perf_counter()
    checks, skipped = SUITES[name](ctx)
    elapsed = time.perf_counter() - start
    failures = [c for c in checks if not c.passed]
    result = SuiteResult(
        suite=name,
        checks=len(checks),
        failures=len(failures),
        skipped=skipped,
        first_failure=failures[0] if failures else None,
        elapsed_seconds=elapsed,
    )
    logger.info(f"Suite {name}: {len(checks)} checks, {len(failures)} failures ({elapsed:.2f}s)")
    return SuiteRun(result=result, checks=checks)


def run_suites(config: RunConfig, names: Optional[Sequence[str]] = None,
               graph: Optional[WeightedGraph] = None) -> List[SuiteRun]:
    return [run_suite(name, config, graph) for name in resolve_suites(names)]


def format_number(value: float) -> str:
    return f"{value:.12g}"


def checks_to_csv(rows: Iterable[Check], prefix: str = "") -> str:
    """CSV with columns (name, lhs, rhs, abs_gap, tol, pass)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for c in rows:
        writer.writerow([
            f"{prefix}{c.name}",
            format_number(c.lhs),
            format_number(c.rhs),
            format_number(c.abs_gap),
            format_number(c.tol),
            "true" if c.passed else "false",
        ])
    return buffer.getvalue()


def format_counterexample(suite: str, check: Check) -> str:
    """First failure with its replay context; the graph block pastes into a dense graph file."""
    lines = [
        f"FIRST FAILURE in {suite}: {check.name}",
        f"  lhs     = {format_number(check.lhs)}",
        f"  rhs     = {format_number(check.rhs)}",
        f"  abs_gap = {format_number(check.abs_gap)}",
        f"  tol     = {format_number(check.tol)}",
    ]
    for key in sorted(k for k in check.context if k != "graph"):
        lines.append(f"  {key} = {check.context[key]}")
    if "graph" in check.context:
        lines.append("  graph (dense format, 1-based files):")
        lines += [f"    {row}" for row in check.context["graph"].rstrip("\n").split("\n")]
    return "\n".join(lines)


def render_text(runs: Sequence[SuiteRun]) -> str:
    width = max((len(r.result.suite) for r in runs), default=5)
    lines = [f"{'suite':<{width}}  {'checks':>7}  {'failures':>8}  {'skipped':>7}  status"]
    for run in runs:
        r = run.result
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.suite:<{width}}  {r.checks:>7}  {r.failures:>8}  {r.skipped:>7}  {status}")
    total = sum(r.result.checks for r in runs)
    failed = sum(r.result.failures for r in runs)
    lines.append(f"total: {total} checks, {failed} failures")
    first = next((r.result for r in runs if r.result.first_failure is not None), None)
    if first is not None:
        lines.append("")
        lines.append(format_counterexample(first.suite, first.first_failure))
    return "\n".join(lines) + "\n"


def render_csv(runs: Sequence[SuiteRun]) -> str:
    rows = [c.model_copy(update={"name": f"{run.result.suite}/{c.name}"}) for run in runs for c in run.checks]
    return checks_to_csv(rows)


def render(runs: Sequence[SuiteRun], output: str) -> str:
    return render_csv(runs) if output == "csv" else render_text(runs)

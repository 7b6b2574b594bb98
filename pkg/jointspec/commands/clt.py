"""`clt`: scaled moments of the star product G^(n) against their limit."""

import argparse
import logging

from ..models import Check, ConvergenceReport, RunConfig
from ..starlimit.report import convergence_report
from ..verify.runner import checks_to_csv
from .common import (
    add_graph_arguments,
    format_value,
    load_graph,
    one_based,
    parse_exponents,
    parse_n_grid,
    parse_vertices,
)

logger = logging.getLogger(__name__)

HELP = "star-product CLT: n^(-|k|/2) E(prod X_u^k) on G^(n) against det(D[k/2])"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "clt", parents=parents, help=HELP, description=HELP + ".\n\n"
        "CSV columns: name (n=...), lhs (scaled moment), rhs (limit), abs_gap, "
        "tol (tol_final), pass (the report's overall verdict).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser)
    parser.add_argument("--subset", required=True, metavar="U", help="merge set, 1-based (e.g. 1,3)")
    parser.add_argument("--k", required=True, metavar="K", help="exponents over the merge set")
    parser.add_argument("--n-grid", metavar="N1,N2,...", help="copies n (default from config)")
    parser.set_defaults(handler=run)


def report_rows(report: ConvergenceReport, tol_final: float, prefix: str = "") -> list:
    return [
        Check(name=f"{prefix}n={row.n}", lhs=row.scaled_moment, rhs=row.limit_moment, abs_gap=row.gap,
              tol=tol_final, passed=report.passed)
        for row in report.rows
    ]


def render_report(report: ConvergenceReport) -> str:
    lines = [f"# u = {one_based(report.merge_set)}  k = {','.join(str(x) for x in report.k)}",
             f"{'n':>8}  {'scaled':>16}  {'limit':>16}  {'gap':>12}"]
    for row in report.rows:
        lines.append(f"{row.n:>8}  {format_value(row.scaled_moment):>16}  "
                     f"{format_value(row.limit_moment):>16}  {format_value(row.gap):>12}")
    slope = "n/a" if report.slope is None else format_value(report.slope)
    final = "gap rate" if report.odd and report.rate_bound is not None else "final gap"
    lines.append(f"slope {slope}; {final} {'ok' if report.final_gap_ok else 'FAIL'}; "
                 f"monotone {'ok' if report.monotone_ok else 'FAIL'}; "
                 f"slope {'ok' if report.slope_ok else 'FAIL'}")
    return "\n".join(lines)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    g = load_graph(args, config)
    u = parse_vertices(args.subset, g.n)
    k = parse_exponents(args.k, len(u))
    n_grid = parse_n_grid(args.n_grid) if args.n_grid else config.n_grid
    tol = config.tolerances
    report = convergence_report(g, u, k, n_grid, tol.clt_final, tol.clt_slope, config.caps.star_direct_max_n)
    if config.output == "csv":
        print(checks_to_csv(report_rows(report, tol.clt_final)), end="")
    else:
        print(render_report(report))
    return 0 if report.passed else 1

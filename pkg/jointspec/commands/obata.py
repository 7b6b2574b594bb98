"""`obata`: the single-vertex case, where the limit is a symmetric sign times sqrt(d_o)."""

import argparse
import logging

from ..models import RunConfig
from ..starlimit.report import obata_degree, obata_special_case
from ..verify.runner import checks_to_csv
from .clt import render_report, report_rows
from .common import add_graph_arguments, format_value, load_graph, parse_n_grid, parse_vertices

logger = logging.getLogger(__name__)

HELP = "star product merged at one root: moments of X_o/sqrt(n) against sqrt(d_o) B"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "obata", parents=parents, help=HELP, description=HELP + ".\n\n"
        "CSV columns as for clt, one block per k = 1..kmax (name k=K/n=N).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser)
    parser.add_argument("--root", required=True, metavar="R", help="root vertex, 1-based")
    parser.add_argument("--kmax", type=int, default=6, help="largest moment order (default 6)")
    parser.add_argument("--n-grid", metavar="N1,N2,...", help="copies n (default from config)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    g = load_graph(args, config)
    (root,) = parse_vertices(args.root, g.n)
    n_grid = parse_n_grid(args.n_grid) if args.n_grid else config.n_grid
    tol = config.tolerances
    reports = obata_special_case(g, root, n_grid, args.kmax, tol.clt_final, tol.clt_slope,
                                 config.caps.star_direct_max_n)
    if config.output == "csv":
        rows = [row for r in reports for row in report_rows(r, tol.clt_final, prefix=f"k={r.k[0]}/")]
        print(checks_to_csv(rows), end="")
    else:
        print(f"# root {root + 1}, d_o = {format_value(obata_degree(g, root))}")
        print("\n\n".join(render_report(r) for r in reports))
    return 0 if all(r.passed for r in reports) else 1

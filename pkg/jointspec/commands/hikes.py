"""`hikes`: hike generating functions for a vertex subset, reconciled with enumeration."""

import argparse
import logging

from ..hikes import generating
from ..hikes.heaps import enumerate_hikes, log_weight, von_mangoldt, von_mangoldt_u
from ..hikes.reconcile import reconcile_all
from ..models import RunConfig
from ..verify.runner import checks_to_csv, format_counterexample
from .common import add_graph_arguments, failures, format_value, load_graph, one_based, parse_vertices

logger = logging.getLogger(__name__)

HELP = "zeta, r_u, log r_u and tr R_u up to z^L, checked against hike and walk enumeration"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "hikes", parents=parents, help=HELP, description=HELP + ".\n\n"
        "CSV columns: name (identity[z^d]), lhs (generating function), rhs "
        "(enumeration), abs_gap, tol, pass.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser)
    parser.add_argument("--subset", default="1", metavar="U", help="vertex subset, 1-based (default 1)")
    parser.add_argument("--list", action="store_true", help="also list every hike with its weights")
    parser.set_defaults(handler=run)


def _series_line(name: str, series) -> str:
    return f"{name:<10} " + " ".join(format_value(c) for c in series.coefficients)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    g = load_graph(args, config)
    u = parse_vertices(args.subset, g.n)
    degree = config.trunc
    hikes = enumerate_hikes(g, degree, cap=config.caps.hike_length)
    checks = reconcile_all(g, u, degree, hikes, config.tolerances.float_identity)
    failed = failures(checks)

    if config.output == "csv":
        print(checks_to_csv(checks), end="")
        return 1 if failed else 0

    print(f"# u = {one_based(u)}, L = {degree}, {len(hikes)} hikes of length <= L")
    print(_series_line("zeta", generating.zeta_series(g, degree)))
    print(_series_line("mobius", generating.mobius_series(g, degree)))
    print(_series_line("r_u", generating.ru_series(g, u, degree)))
    print(_series_line("log r_u", generating.log_ru_series(g, u, degree)))
    print(_series_line("tr R", generating.von_mangoldt_series(g, degree)))
    print(_series_line("tr R_u", generating.von_mangoldt_u_series(g, u, degree)))
    if args.list:
        print("# length  weight  pyramid  Lambda  Lambda_u  Lambda_u/l_u  hike")
        for h in hikes:
            print(f"{h.length}  {format_value(h.weight)}  {'yes' if h.is_pyramid else 'no'}  "
                  f"{von_mangoldt(h)}  {von_mangoldt_u(h, u)}  {format_value(log_weight(h, u))}  {h}")
    print(f"reconciled {len(checks)} coefficients, {len(failed)} failures")
    if failed:
        print(format_counterexample("hikes", failed[0]))
    return 1 if failed else 0

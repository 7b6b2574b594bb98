"""`verify`: run the identity suites and exit nonzero on any failure."""

import argparse
import logging

from ..errors import DomainError
from ..models import RunConfig
from ..verify import SUITES, render, run_suites
from .common import add_graph_arguments, load_graph

logger = logging.getLogger(__name__)

HELP = "run every identity suite (random graphs, or one --graph) and report"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "verify", parents=parents, help=HELP, description=HELP + ".\n\n"
        f"Suites: {', '.join(SUITES)}.\n"
        "Text output is a summary table followed by the first failure, whose dense "
        "block pastes into a graph file for replay. CSV has one row per check with "
        "columns name (suite/identity), lhs, rhs, abs_gap, tol, pass.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser, required=False)
    parser.add_argument("--random", action="store_true",
                        help="use the random and built-in graphs (the default without --graph)")
    parser.add_argument("--suite", action="append", metavar="NAME", help="run only this suite (repeatable)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    if args.random and (args.graph is not None or args.family is not None):
        raise DomainError("--random cannot be combined with --graph or --family")
    graph = load_graph(args, config)
    runs = run_suites(config, args.suite, graph)
    print(render(runs, config.output), end="")
    failed = [r.result.suite for r in runs if not r.result.passed]
    if failed:
        logger.warning(f"Failed suites: {', '.join(failed)}")
    return 1 if failed else 0

"""`moments`: one generalized moment m[k] = det A[k]."""

import argparse
import logging

from ..checks import compare
from ..jsm.measure import build_measure, moment_oracle, moment_scale
from ..jsm.moments import generalized_moment
from ..linalg.eigen import eigendecompose
from ..models import RunConfig
from ..verify.runner import checks_to_csv
from .common import add_graph_arguments, format_value, load_graph, parse_exponents

logger = logging.getLogger(__name__)

HELP = "generalized moment E(X_1^k_1 ... X_N^k_N) of the joint spectral measure"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "moments", parents=parents, help=HELP, description=HELP + ".\n\n"
        "Text output is the value alone. CSV columns: name, lhs (determinant), "
        "rhs (atom sum when N is within the measure cap), abs_gap, tol, pass.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser)
    parser.add_argument("--k", required=True, metavar="K1,...,KN", help="exponent of every vertex")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    g = load_graph(args, config)
    k = parse_exponents(args.k, g.n)
    value = generalized_moment(g, k)
    if config.output == "text":
        print(format_value(value))
        return 0

    context = {"k": list(k)}
    if g.n <= config.caps.measure_dim:
        measure = build_measure(eigendecompose(g.matrix), cap=config.caps.measure_dim)
        check = compare("moment", value, moment_oracle(measure, k), config.tolerances.oracle_float,
                        scale=moment_scale(measure, k), context=context)
    else:
        logger.info(f"N = {g.n} above the measure cap; no atom cross-check")
        check = compare("moment", value, value, context=context)
    print(checks_to_csv([check]), end="")
    return 0 if check.passed else 1

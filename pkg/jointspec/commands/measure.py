"""`measure`: the atoms of the joint spectral measure."""

import argparse
import logging

from ..checks import compare
from ..jsm.measure import build_measure, marginal_distribution, rooted_spectral_measure
from ..linalg.eigen import eigendecompose
from ..models import RunConfig
from ..verify.runner import checks_to_csv
from .common import add_graph_arguments, format_value, load_graph

logger = logging.getLogger(__name__)

HELP = "list the atoms (point, weight) of the joint spectral measure"


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "measure", parents=parents, help=HELP, description=HELP + ".\n\n"
        "Text output: one line per atom (weight, then the eigenvalue at each vertex). "
        "CSV columns: name, lhs, rhs, abs_gap, tol, pass, with one row for the "
        "total mass and one per (vertex, eigenvalue class) marginal against p_ik^2.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    g = load_graph(args, config)
    tol = config.tolerances
    eig = eigendecompose(g.matrix, sweeps=config.caps.jacobi_sweeps, class_tol=tol.eig_class)
    measure = build_measure(eig, cap=config.caps.measure_dim)

    if config.output == "text":
        print(f"# {len(measure.atoms)} atoms, N = {g.n}, total variation "
              f"{format_value(measure.total_variation)}")
        print("# weight  x_1 ... x_N")
        for atom in sorted(measure.atoms, key=lambda a: a.classes):
            print("  ".join([format_value(atom.weight)] + [format_value(x) for x in atom.point]))
        return 0

    checks = [compare("mass", measure.total_mass, 1.0, tol.mass)]
    for i in range(g.n):
        law = marginal_distribution(measure, i)
        for c, (value, weight) in enumerate(rooted_spectral_measure(eig, i)):
            checks.append(compare(f"P(X_{i + 1}={format_value(value)})", law.get(c, 0.0), weight,
                                  tol.float_identity, context={"vertex": i + 1}))
    print(checks_to_csv(checks), end="")
    return 0 if all(c.passed for c in checks) else 1

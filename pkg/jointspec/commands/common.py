"""Shared pieces of the command modules: graph loading, 1-based parsing, formatting."""

import argparse
import logging
import numbers
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from ..errors import DomainError
from ..graphs import family
from ..graphs.graph import WeightedGraph
from ..graphs.parser import GraphFile, parse_graph
from ..linalg.matrix import SYMMETRY_TOL
from ..models import Check, RunConfig

logger = logging.getLogger(__name__)


def add_graph_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_argument_group("graph input")
    group.add_argument("--graph", type=Path, help="graph file (1-based vertex ids)")
    group.add_argument("--format", choices=("edge", "dense"), default="edge",
                       help="graph file format (default: edge)")
    group.add_argument("--family", metavar="NAME:ARGS",
                       help="built-in graph, e.g. complete:3, star:3, gnp:6:0.5:7, copies:2:path:2")
    parser.set_defaults(graph_required=required)


def load_graph(args: argparse.Namespace, config: Optional[RunConfig] = None) -> Optional[WeightedGraph]:
    """The graph named by --graph/--format or --family; None when neither is given
    and the command does not need one.
    """
    if args.graph is not None and args.family is not None:
        raise DomainError("use either --graph or --family, not both")
    if args.graph is not None:
        tol = config.tolerances.symmetry if config is not None else SYMMETRY_TOL
        g = parse_graph(GraphFile(path=args.graph, format=args.format, symmetry_tol=tol))
        logger.info(f"Loaded {g.n}-vertex graph from {args.graph}")
        return g
    if args.family is not None:
        return family.from_spec(args.family)
    if getattr(args, "graph_required", True):
        raise DomainError("a graph is required (--graph PATH or --family NAME:ARGS)")
    return None


def _integers(text: str, what: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"{what} must be a comma-separated list of integers, got {text!r}")


def parse_vertices(text: str, n: int) -> Tuple[int, ...]:
    """'1,3' → (0, 2); vertices are 1-based on the command line."""
    values = _integers(text, "vertex list")
    if not values:
        raise DomainError("vertex list is empty")
    bad = [v for v in values if not 1 <= v <= n]
    if bad:
        raise DomainError(f"vertices {bad} out of range 1..{n}")
    if len(set(values)) != len(values):
        raise DomainError(f"vertex list {text!r} has repeats")
    return tuple(v - 1 for v in values)


def parse_exponents(text: str, length: Optional[int] = None) -> Tuple[int, ...]:
    """'2,0,1' → (2, 0, 1): a multi-index of non-negative exponents."""
    values = _integers(text, "multi-index")
    if any(v < 0 for v in values):
        raise DomainError(f"exponents must be non-negative, got {values}")
    if length is not None and len(values) != length:
        raise DomainError(f"multi-index needs {length} entries, got {len(values)}")
    return tuple(values)


def parse_n_grid(text: str) -> Tuple[int, ...]:
    values = _integers(text, "n grid")
    if not values or any(n < 1 for n in values) or any(a >= b for a, b in zip(values, values[1:])):
        raise DomainError(f"n grid must be strictly increasing positive integers, got {text!r}")
    return tuple(values)


def format_value(value) -> str:
    """Exact values print exactly; floats with 12 significant digits."""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    return f"{float(value):.12g}"


def one_based(vertices: Iterable[int]) -> str:
    return ",".join(str(v + 1) for v in vertices)


def failures(checks: Iterable[Check]) -> List[Check]:
    return [c for c in checks if not c.passed]

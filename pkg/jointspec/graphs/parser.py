"""Graph file ingestion (edge lists and dense matrices) and dense dumps."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np

from ..errors import DomainError, GraphParseError
from ..linalg.matrix import SYMMETRY_TOL
from .graph import WeightedGraph

logger = logging.getLogger(__name__)

GraphFormat = Literal["edge", "dense"]


@dataclass(frozen=True)
class GraphFile:
    """Where a graph comes from and how to read it."""
    path: Path
    format: GraphFormat = "edge"
    symmetry_tol: float = SYMMETRY_TOL


def _strip_comments(text: str) -> List[Tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _number(token: str, path: Optional[str], line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise GraphParseError(f"not a number: {token!r}", path, line)
    if not np.isfinite(value):
        raise GraphParseError(f"non-finite value: {token!r}", path, line)
    return value


def _vertex(token: str, path: Optional[str], line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(f"vertex id must be an integer, got {token!r}", path, line)
    if value <= 0:
        raise GraphParseError(f"vertex ids are 1-based, got {value}", path, line)
    return value


def parse_edge_list(text: str, source: Optional[str] = None, name: str = "graph") -> WeightedGraph:
    """Lines "i j" or "i j w"; duplicate edges are summed, "i i w" is a loop."""
    edges: Dict[Tuple[int, int], float] = {}
    n = 0
    for number, line in _strip_comments(text):
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise GraphParseError(f"expected 'i j' or 'i j w', got {line!r}", source, number)
        i = _vertex(tokens[0], source, number)
        j = _vertex(tokens[1], source, number)
        w = _number(tokens[2], source, number) if len(tokens) == 3 else 1.0
        key = (min(i, j), max(i, j))
        edges[key] = edges.get(key, 0.0) + w
        n = max(n, i, j)
    if n == 0:
        raise GraphParseError("edge list has no edges", source)

    arr = np.zeros((n, n))
    for (i, j), w in edges.items():
        arr[i - 1, j - 1] = w
        arr[j - 1, i - 1] = w
    logger.debug(f"Parsed edge list {source or '<text>'}: n={n}, {len(edges)} distinct edges")
    return WeightedGraph.from_array(arr, name=name)


def parse_dense(text: str, source: Optional[str] = None, name: str = "graph",
                tol: float = SYMMETRY_TOL) -> WeightedGraph:
    """First line n, then n rows of n numbers; asymmetry above tol (relative) is an error."""
    lines = _strip_comments(text)
    if not lines:
        raise GraphParseError("empty dense matrix file", source)
    header_line, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise GraphParseError(f"first line must be the dimension n, got {header!r}", source, header_line)
    if n <= 0:
        raise GraphParseError(f"dimension must be positive, got {n}", source, header_line)
    rows = lines[1:]
    if len(rows) != n:
        where = rows[-1][0] if rows else header_line
        raise GraphParseError(f"expected {n} matrix rows, found {len(rows)}", source, where)

    arr = np.zeros((n, n))
    for r, (number, line) in enumerate(rows):
        tokens = line.split()
        if len(tokens) != n:
            raise GraphParseError(f"row has {len(tokens)} entries, expected {n}", source, number)
        arr[r] = [_number(t, source, number) for t in tokens]
    try:
        return WeightedGraph.from_array(arr, name=name, tol=tol)
    except DomainError as e:
        raise GraphParseError(str(e), source) from e


def parse_graph(file: GraphFile) -> WeightedGraph:
    """Read and parse a graph file.

    Raises:
        GraphParseError: unreadable file, malformed line, asymmetric dense matrix.
    """
    try:
        text = file.path.read_text()
    except OSError as e:
        raise GraphParseError(f"cannot read graph file: {e.strerror}", str(file.path)) from e
    name = file.path.stem
    if file.format == "dense":
        return parse_dense(text, str(file.path), name=name, tol=file.symmetry_tol)
    return parse_edge_list(text, str(file.path), name=name)


def _format_value(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def dump_dense(g: WeightedGraph) -> str:
    """Dense-format text that parse_dense reads back to an equal graph."""
    lines = [str(g.n)]
    for row in g.entries:
        lines.append(" ".join(_format_value(x) for x in row))
    return "\n".join(lines) + "\n"

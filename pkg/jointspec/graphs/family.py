"""Built-in test family: path, cycle, complete, star, G(n,p) and disjoint copies."""

from typing import Callable, Dict, List

import networkx as nx
import numpy as np

from ..errors import DomainError
from .graph import WeightedGraph


def path(n: int) -> WeightedGraph:
    return WeightedGraph.from_networkx(nx.path_graph(n), name=f"P{n}")


def cycle(n: int) -> WeightedGraph:
    if n < 3:
        raise DomainError(f"cycle graph needs n >= 3, got {n}")
    return WeightedGraph.from_networkx(nx.cycle_graph(n), name=f"C{n}")


def complete(n: int) -> WeightedGraph:
    return WeightedGraph.from_networkx(nx.complete_graph(n), name=f"K{n}")


def star(k: int) -> WeightedGraph:
    """K_{1,k}; the center is vertex 0."""
    return WeightedGraph.from_networkx(nx.star_graph(k), name=f"K1,{k}")


def gnp(n: int, p: float, seed: int = 0) -> WeightedGraph:
    g = nx.gnp_random_graph(n, p, seed=seed)
    return WeightedGraph.from_networkx(g, name=f"G({n},{p},{seed})")


def disjoint_copies(g: WeightedGraph, m: int = 2) -> WeightedGraph:
    """m disjoint copies of g; every eigenvalue gets multiplicity ≥ m."""
    if m < 1:
        raise DomainError(f"number of copies must be >= 1, got {m}")
    arr = np.kron(np.eye(m), g.entries)
    return WeightedGraph.from_array(arr, name=f"{m}x{g.name}")


_BUILDERS: Dict[str, Callable[[List[str]], WeightedGraph]] = {
    "path": lambda a: path(int(a[0])),
    "cycle": lambda a: cycle(int(a[0])),
    "complete": lambda a: complete(int(a[0])),
    "star": lambda a: star(int(a[0])),
    "gnp": lambda a: gnp(int(a[0]), float(a[1]), int(a[2]) if len(a) > 2 else 0),
}

_ARITY = {"path": (1, 1), "cycle": (1, 1), "complete": (1, 1), "star": (1, 1), "gnp": (2, 3)}


def from_spec(spec: str) -> WeightedGraph:
    """Build a family graph from 'NAME:ARGS', e.g. 'complete:3' or 'gnp:6:0.5:7'.

    'copies:M:NAME:ARGS' wraps a family graph in M disjoint copies.
    """
    parts = spec.strip().split(":")
    name, args = parts[0].lower(), parts[1:]
    if name == "copies":
        if len(args) < 2:
            raise DomainError(f"expected 'copies:M:NAME:ARGS', got {spec!r}")
        try:
            m = int(args[0])
        except ValueError:
            raise DomainError(f"copy count must be an integer in {spec!r}")
        return disjoint_copies(from_spec(":".join(args[1:])), m)
    if name not in _BUILDERS:
        raise DomainError(f"unknown graph family {name!r} (choose from {', '.join(sorted(_BUILDERS))}, copies)")
    low, high = _ARITY[name]
    if not low <= len(args) <= high:
        raise DomainError(f"family {name!r} takes {low}..{high} arguments, got {len(args)}")
    try:
        return _BUILDERS[name](args)
    except ValueError as e:
        raise DomainError(f"bad arguments in {spec!r}: {e}") from e


def standard_family(max_n: int = 5) -> List[WeightedGraph]:
    """Paths, cycles, complete graphs and stars with at most max_n vertices,
    plus two disjoint edges (a graph with repeated eigenvalues).
    """
    graphs = [path(n) for n in range(2, max_n + 1)]
    graphs += [cycle(n) for n in range(3, max_n + 1)]
    graphs += [complete(n) for n in range(3, max_n + 1)]
    graphs += [star(k) for k in range(2, max_n)]
    if max_n >= 4:
        graphs.append(disjoint_copies(path(2), 2))
    return graphs

"""Brute-force walk and excursion enumeration (independent oracles)."""

import logging
from collections import Counter
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from ..errors import CapExceededError
from ..graphs.graph import GraphLike, as_matrix
from ..linalg.matrix import validate_subset
from .heaps import Hike, walk_to_hike
from .series import Number, normalize

logger = logging.getLogger(__name__)

DEFAULT_WALK_CAP = 10


def _reachability(pattern: np.ndarray, steps: int) -> List[np.ndarray]:
    """reach[r][a, b]: b is reachable from a in exactly r steps."""
    reach = [np.eye(pattern.shape[0], dtype=bool)]
    for _ in range(steps):
        reach.append((reach[-1].astype(int) @ pattern.astype(int)) > 0)
    return reach


def closed_walks(g: GraphLike, length: int, start: int) -> Iterator[Tuple[int, ...]]:
    """Closed walks of exactly `length` steps from `start` along nonzero entries."""
    m = as_matrix(g)
    pattern = m.entries != 0
    reach = _reachability(pattern, length)
    neighbours = [np.nonzero(pattern[i])[0].tolist() for i in range(m.n)]

    def extend(walk: List[int]) -> Iterator[Tuple[int, ...]]:
        remaining = length - (len(walk) - 1)
        if remaining == 0:
            if walk[-1] == start:
                yield tuple(walk)
            return
        for v in neighbours[walk[-1]]:
            if reach[remaining - 1][v, start]:
                walk.append(v)
                yield from extend(walk)
                walk.pop()

    if length == 0:
        yield (start,)
        return
    yield from extend([start])


def walk_weight(weights: np.ndarray, walk: Sequence[int]) -> Number:
    w = 1
    for a, b in zip(walk, walk[1:]):
        w = w * weights[a, b]
    return normalize(w)


def pyramid_walk_counts(g: GraphLike, max_length: int, cap: int = DEFAULT_WALK_CAP) -> Dict[Hike, int]:
    """How many closed walks (any start, 1..max_length steps) project onto each hike."""
    if max_length > cap:
        raise CapExceededError("walk length L", max_length, cap)
    m = as_matrix(g)
    counts: Counter = Counter()
    for length in range(1, max_length + 1):
        for start in range(m.n):
            for walk in closed_walks(m, length, start):
                counts[walk_to_hike(m, walk)] += 1
    logger.debug(f"Projected closed walks onto {len(counts)} pyramids (L={max_length})")
    return dict(counts)


def excursion_weights(g: GraphLike, u: Sequence[int], max_length: int,
                      cap: int = DEFAULT_WALK_CAP) -> np.ndarray:
    """Brute-force excursion totals: out[a, b, k] sums the weights of walks of
    length k from u[a] to u[b] whose interior avoids u.
    """
    if max_length > cap:
        raise CapExceededError("walk length L", max_length, cap)
    m = as_matrix(g)
    u = validate_subset(m.n, u)
    inside = set(u)
    weights = m.values()
    pattern = m.entries != 0
    outside = [v for v in range(m.n) if v not in inside]
    p = len(u)
    out = np.empty((p, p, max_length + 1), dtype=object)
    out.fill(0)

    def extend(a: int, walk: List[int], weight) -> None:
        steps = len(walk) - 1
        tip = walk[-1]
        if steps >= max_length:
            return
        for b, target in enumerate(u):
            if pattern[tip, target]:
                out[a, b, steps + 1] = normalize(out[a, b, steps + 1] + weight * weights[tip, target])
        if steps + 2 > max_length:
            return
        for v in outside:
            if pattern[tip, v]:
                walk.append(v)
                extend(a, walk, weight * weights[tip, v])
                walk.pop()

    for a, source in enumerate(u):
        extend(a, [source], 1)
    if not m.integral:
        out = out.astype(float)
    return out

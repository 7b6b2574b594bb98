"""Simple cycles of the symmetric digraph of a graph."""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence

import numpy as np

from ..graphs.graph import GraphLike, as_matrix
from .series import Number, TruncatedSeries, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SimpleCycle:
    """Closed path visiting each vertex once, rotated to start at its minimal vertex.

    Orientation matters: (0, 1, 2) and (0, 2, 1) are different cycles.
    """
    vertices: tuple
    weight: Number = field(default=1, compare=False)

    @classmethod
    def from_sequence(cls, vertices: Sequence[int], weights: np.ndarray) -> "SimpleCycle":
        seq = [int(v) for v in vertices]
        start = seq.index(min(seq))
        seq = seq[start:] + seq[:start]
        w = 1
        for a, b in zip(seq, seq[1:] + seq[:1]):
            w = w * weights[a, b]
        return cls(tuple(seq), normalize(w))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def overlaps(self, other: "SimpleCycle") -> bool:
        return not self.support.isdisjoint(other.support)

    def __str__(self) -> str:
        return "(" + " ".join(str(v + 1) for v in self.vertices) + ")"


def enumerate_simple_cycles(g: GraphLike, max_length: Optional[int] = None) -> List[SimpleCycle]:
    """All simple cycles of the symmetric digraph of g.

    Self-loops for nonzero diagonal entries, one 2-cycle per edge, and both
    orientations of every longer cycle. Sorted by (length, vertices).
    """
    m = as_matrix(g)
    weights = m.values()
    n = m.n
    bound = n if max_length is None else min(n, max_length)
    neighbours = [[int(j) for j in np.nonzero(m.entries[i])[0]] for i in range(n)]
    cycles: List[SimpleCycle] = []

    for start in range(n):
        if m.entries[start, start] != 0 and bound >= 1:
            cycles.append(SimpleCycle.from_sequence([start], weights))
        path = [start]
        on_path = {start}
        stack = [iter(j for j in neighbours[start] if j > start)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            # neighbours of the path tip that close back to start
            path.append(nxt)
            on_path.add(nxt)
            if m.entries[nxt, start] != 0 and len(path) <= bound:
                cycles.append(SimpleCycle.from_sequence(path, weights))
            if len(path) < bound:
                stack.append(iter(j for j in neighbours[nxt] if j > start and j not in on_path))
            else:
                path.pop()
                on_path.discard(nxt)
    cycles.sort(key=lambda c: (c.length, c.vertices))
    logger.debug(f"Enumerated {len(cycles)} simple cycles (n={n}, bound={bound})")
    return cycles


def cycle_weight_sum(cycles: Iterable[SimpleCycle], vertices: Iterable[int]) -> Number:
    """c(u): total weight of the cycles whose vertex set is exactly u."""
    target = frozenset(int(v) for v in vertices)
    return normalize(sum((c.weight for c in cycles if c.support == target), 0))


def mobius_from_cycles(g: GraphLike, degree: int) -> TruncatedSeries:
    """Σ over collections of pairwise vertex-disjoint cycles of (−1)^#·∏w·z^ℓ."""
    cycles = enumerate_simple_cycles(g, max_length=degree)
    coeffs: List[Number] = [0] * (degree + 1)

    def extend(first: int, used: FrozenSet[int], length: int, sign: int, weight) -> None:
        coeffs[length] = coeffs[length] + sign * weight
        for idx in range(first, len(cycles)):
            c = cycles[idx]
            if length + c.length > degree or not used.isdisjoint(c.support):
                continue
            extend(idx + 1, used | c.support, length + c.length, -sign, weight * c.weight)

    extend(0, frozenset(), 0, 1, 1)
    return TruncatedSeries.of(coeffs, degree)

"""Hikes as heaps of cycles, stored in Cartier–Foata normal form."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from fractions import Fraction

from ..errors import CapExceededError, DomainError
from ..graphs.graph import GraphLike, as_matrix
from .cycles import SimpleCycle, enumerate_simple_cycles
from .series import Number, normalize

logger = logging.getLogger(__name__)

DEFAULT_LENGTH_CAP = 10


@dataclass(frozen=True)
class Hike:
    """Levels of pairwise vertex-disjoint cycles.

    Every cycle on level i+1 meets some cycle on level i. Levels are sorted
    tuples, so two hikes are equal iff they are the same heap.
    """
    levels: Tuple[Tuple[SimpleCycle, ...], ...] = ()

    @property
    def pieces(self) -> Tuple[SimpleCycle, ...]:
        return tuple(c for level in self.levels for c in level)

    @property
    def length(self) -> int:
        return sum(c.length for c in self.pieces)

    @property
    def weight(self) -> Number:
        w = 1
        for c in self.pieces:
            w = w * c.weight
        return normalize(w)

    @property
    def is_empty(self) -> bool:
        return not self.levels

    def push(self, cycle: SimpleCycle) -> "Hike":
        """Right-multiply by a cycle: it falls onto the highest piece it meets."""
        target = 0
        for i, level in enumerate(self.levels):
            if any(c.overlaps(cycle) for c in level):
                target = i + 1
        levels = list(self.levels)
        if target == len(levels):
            levels.append((cycle,))
        else:
            levels[target] = tuple(sorted(levels[target] + (cycle,)))
        return Hike(tuple(levels))

    def maximal_pieces(self) -> Tuple[SimpleCycle, ...]:
        """Pieces with nothing above them; these are the prime right divisors."""
        out = []
        for i, level in enumerate(self.levels):
            for c in level:
                covered = any(c.overlaps(d) for above in self.levels[i + 1:] for d in above)
                if not covered:
                    out.append(c)
        return tuple(out)

    @property
    def is_pyramid(self) -> bool:
        return len(self.maximal_pieces()) == 1

    def sort_key(self) -> tuple:
        return (self.length, tuple(tuple(c.vertices for c in level) for level in self.levels))

    def __str__(self) -> str:
        if self.is_empty:
            return "1"
        return " | ".join(" ".join(str(c) for c in level) for level in self.levels)


def build_hike(cycles: Iterable[SimpleCycle]) -> Hike:
    """The hike c_1·c_2·…·c_m."""
    h = Hike()
    for c in cycles:
        h = h.push(c)
    return h


def enumerate_hikes(g: GraphLike, max_length: int, cap: int = DEFAULT_LENGTH_CAP) -> List[Hike]:
    """All hikes of total length ≤ max_length, sorted by length then structure.

    Raises:
        CapExceededError: max_length above the enumeration cap.
    """
    if max_length > cap:
        raise CapExceededError("hike length L", max_length, cap)
    if max_length < 0:
        raise DomainError(f"hike length must be >= 0, got {max_length}")
    cycles = enumerate_simple_cycles(g, max_length=max_length)
    by_length: Dict[int, set] = {k: set() for k in range(max_length + 1)}
    by_length[0].add(Hike())
    for length in range(max_length + 1):
        for h in by_length[length]:
            for c in cycles:
                if length + c.length <= max_length:
                    by_length[length + c.length].add(h.push(c))
    hikes = [h for k in range(max_length + 1) for h in by_length[k]]
    hikes.sort(key=Hike.sort_key)
    logger.debug(f"Enumerated {len(hikes)} hikes of length <= {max_length}")
    return hikes


def right_divisor_filter(h: Hike, u: Iterable[int]) -> bool:
    """True iff every maximal piece of h meets u (vacuously true for the empty hike)."""
    target = frozenset(int(v) for v in u)
    return all(not c.support.isdisjoint(target) for c in h.maximal_pieces())


def u_visits(h: Hike, u: Iterable[int]) -> int:
    """ℓ_u(h): visits of h to u, counted with multiplicity over pieces."""
    target = frozenset(int(v) for v in u)
    return sum(len(c.support & target) for c in h.pieces)


def von_mangoldt(h: Hike) -> int:
    """Λ(h): length of the unique maximal piece of a pyramid, 0 otherwise."""
    top = h.maximal_pieces()
    return top[0].length if len(top) == 1 else 0


def von_mangoldt_u(h: Hike, u: Iterable[int]) -> int:
    """Λ_u(h): visits of the unique maximal piece to u, 0 for non-pyramids."""
    top = h.maximal_pieces()
    if len(top) != 1:
        return 0
    target = frozenset(int(v) for v in u)
    return len(top[0].support & target)


def log_weight(h: Hike, u: Iterable[int]) -> Number:
    """Λ_u(h)/ℓ_u(h), the coefficient of h in log r_u."""
    u = frozenset(int(v) for v in u)
    lam = von_mangoldt_u(h, u)
    if lam == 0:
        return 0
    return normalize(Fraction(lam, u_visits(h, u)))


def walk_to_hike(g: GraphLike, walk: Sequence[int]) -> Hike:
    """Project a closed walk onto its heap of cycles by loop erasure.

    Cycles are pushed in the order they close; the last one contains the
    starting vertex and is the unique maximal piece.
    """
    walk = [int(v) for v in walk]
    if len(walk) < 2 or walk[0] != walk[-1]:
        raise DomainError(f"walk must be closed with at least one step: {walk}")
    m = as_matrix(g)
    weights = m.values()
    for a, b in zip(walk, walk[1:]):
        if m.entries[a, b] == 0:
            raise DomainError(f"walk uses a non-edge ({a + 1}, {b + 1})")

    h = Hike()
    stack = [walk[0]]
    for v in walk[1:]:
        if v in stack:
            idx = stack.index(v)
            loop = stack[idx:]
            del stack[idx + 1:]
            h = h.push(SimpleCycle.from_sequence(loop, weights))
        else:
            stack.append(v)
    return h



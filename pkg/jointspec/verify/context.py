"""Per-suite run context: configuration, seeding and the trial pool."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, TypeVar

import numpy as np

from ..errors import DomainError, IdentityViolation
from ..graphs.graph import WeightedGraph
from ..graphs.parser import dump_dense
from ..models import Check, RunConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class SuiteContext:
    """What a suite needs: config, an optional user graph, and deterministic seeds."""
    config: RunConfig
    suite_index: int
    graph: Optional[WeightedGraph] = None

    @property
    def tol(self):
        return self.config.tolerances

    @property
    def caps(self):
        return self.config.caps

    def trials(self, default: int) -> int:
        return self.config.trials or default

    def rng(self, trial: int) -> np.random.Generator:
        """Generator seeded by (seed, suite, trial); independent of scheduling."""
        return np.random.default_rng([self.config.seed, self.suite_index, trial])

    def map(self, fn: Callable[[int], T], count: int) -> List[T]:
        """Run fn(0..count-1), on a thread pool when workers > 1; order is by trial."""
        if self.config.workers <= 1 or count <= 1:
            return [fn(t) for t in range(count)]
        with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
            return list(pool.map(fn, range(count)))


def with_replay(graph: WeightedGraph, checks: List[Check]) -> List[Check]:
    """Attach a pasteable dense dump of the graph to every failing check."""
    out = []
    for c in checks:
        if not c.passed:
            c = c.model_copy(update={"context": {**c.context, "graph": dump_dense(graph)}})
        out.append(c)
    return out


def guarded(name: str, graph: WeightedGraph, fn: Callable[[], List[Check]]) -> List[Check]:
    """Run fn, turning a raised violation into a failing check carrying the graph."""
    try:
        checks = fn()
    except IdentityViolation as e:
        logger.debug(f"{name}: {e}")
        checks = [e.check]
    except DomainError as e:
        logger.debug(f"{name}: {e}")
        checks = [Check(name=name, lhs=float("nan"), rhs=float("nan"), abs_gap=float("inf"),
                        tol=0.0, passed=False, context={"error": str(e)})]
    return with_replay(graph, checks)

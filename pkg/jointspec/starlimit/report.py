"""Convergence of scaled star-product moments to the limit law."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from ..checks import compare, require
from ..errors import DomainError
from ..graphs.graph import GraphLike, as_matrix
from ..linalg.matrix import validate_subset
from ..models import ConvergenceReport, ConvergenceRow
from .limit import LimitLaw, limit_law, limit_moment, scaled_moment
from .product import DIRECT_MAX_N, build_star_product

logger = logging.getLogger(__name__)

DEFAULT_N_GRID = (10, 100, 1000, 10000)
TOL_FINAL = 0.05
MAX_SLOPE = -0.4
BURN_IN = 1
# Allowed growth of √n·gap for odd k, whose limit is 0
RATE_GROWTH = 2.0
# Gaps below this are treated as exactly zero
ZERO_GAP = 1e-12


def fitted_slope(ns: Sequence[int], gaps: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log gap against log n over the nonzero gaps."""
    points = [(n, g) for n, g in zip(ns, gaps) if g > ZERO_GAP]
    if len(points) < 2:
        return None
    x = np.log([n for n, _ in points])
    y = np.log([g for _, g in points])
    return float(np.polyfit(x, y, 1)[0])


def convergence_report(
    g: GraphLike,
    u: Sequence[int],
    k: Sequence[int],
    n_list: Sequence[int] = DEFAULT_N_GRID,
    tol_final: float = TOL_FINAL,
    max_slope: float = MAX_SLOPE,
    direct_max_n: int = DIRECT_MAX_N,
    law: Optional[LimitLaw] = None,
) -> ConvergenceReport:
    """Scaled moments of G^(n) for each n against the limit moment.

    Passes when the gaps after the burn-in rows never increase, the fitted
    log-log slope is at most max_slope, and the last row is close enough.
    For even k that means the last gap is within tol_final. For odd k the
    limit is 0 and the gap decays like c/√n, so √n·gap at the last n must
    stay within RATE_GROWTH times its largest earlier value, plus tol_final.
    """
    n_list = [int(n) for n in n_list]
    if not n_list or any(a >= b for a, b in zip(n_list, n_list[1:])):
        raise DomainError(f"n list must be strictly increasing, got {n_list}")
    m = as_matrix(g)
    u = validate_subset(m.n, u, proper=True)
    law = law or limit_law(m, u)
    limit = float(limit_moment(law, k))

    rows = []
    for n in n_list:
        sp = build_star_product(m, u, n)
        value = scaled_moment(sp, k, direct_max_n)
        rows.append(ConvergenceRow(n=n, scaled_moment=value, limit_moment=limit, gap=abs(value - limit)))
        logger.debug(f"CLT u={list(u)} k={list(k)} n={n}: scaled={value:.6g} limit={limit:.6g}")

    tail = rows[BURN_IN:] if len(rows) > BURN_IN else rows
    gaps = [r.gap for r in tail]
    slope = fitted_slope([r.n for r in tail], gaps)
    odd = any(x % 2 for x in k)
    rate_bound = None
    if odd and len(rows) > 1:
        rate_bound = RATE_GROWTH * max(float(np.sqrt(r.n) * r.gap) for r in rows[:-1])
        final_gap_ok = float(np.sqrt(rows[-1].n) * rows[-1].gap) <= rate_bound + tol_final
    else:
        final_gap_ok = rows[-1].gap <= tol_final
    return ConvergenceReport(
        merge_set=list(u),
        k=[int(x) for x in k],
        rows=rows,
        slope=slope,
        final_gap_ok=final_gap_ok,
        monotone_ok=all(b <= a + ZERO_GAP for a, b in zip(gaps, gaps[1:])),
        slope_ok=slope is None or slope <= max_slope,
        odd=odd,
        rate_bound=rate_bound,
    )


def obata_degree(g: GraphLike, root: int) -> float:
    """d_o = Σ_{v≠o} a_ov², the weighted degree of the root into the copies."""
    m = as_matrix(g)
    (root,) = validate_subset(m.n, [root])
    row = m.entries[root]
    return float(np.sum(row ** 2) - row[root] ** 2)


def obata_special_case(
    g: GraphLike,
    root: int,
    n_list: Sequence[int] = DEFAULT_N_GRID,
    kmax: int = 6,
    tol_final: float = TOL_FINAL,
    max_slope: float = MAX_SLOPE,
    direct_max_n: int = DIRECT_MAX_N,
) -> List[ConvergenceReport]:
    """Single merged vertex: the limit is √d_o times a symmetric sign.

    Checks that the limit moments are d_o^{k/2} for even k and 0 for odd k,
    and returns one convergence report per k = 1..kmax.
    """
    m = as_matrix(g)
    law = limit_law(m, [root])
    d_o = obata_degree(m, root)
    reports = []
    for k in range(1, kmax + 1):
        expected = d_o ** (k // 2) if k % 2 == 0 else 0.0
        require(compare("obata-limit-moment", float(limit_moment(law, [k])), expected, 1e-10,
                        scale=abs(expected), context={"root": root, "k": k}))
        reports.append(convergence_report(m, [root], [k], n_list, tol_final, max_slope, direct_max_n, law))
    return reports

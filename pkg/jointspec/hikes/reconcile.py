"""Reconcile every hike generating function against brute-force enumeration."""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..checks import compare
from ..graphs.graph import GraphLike, as_matrix
from ..linalg.matrix import complement, power_table, submatrix, validate_subset
from ..models import Check
from . import generating
from .cycles import mobius_from_cycles
from .heaps import (
    Hike,
    enumerate_hikes,
    log_weight,
    right_divisor_filter,
    von_mangoldt,
    von_mangoldt_u,
)
from .series import TruncatedSeries, normalize
from .walks import DEFAULT_WALK_CAP, closed_walks, excursion_weights, pyramid_walk_counts, walk_weight

logger = logging.getLogger(__name__)


def _series_checks(name: str, lhs: TruncatedSeries, rhs: Sequence, tol: float,
                   start: int = 0, **context) -> List[Check]:
    return [
        compare(f"{name}[z^{k}]", lhs[k], rhs[k], tol, context={**context, "degree": k})
        for k in range(start, lhs.degree + 1)
    ]


def _totals(hikes: List[Hike], degree: int, weight_of) -> List:
    out = [0] * (degree + 1)
    for h in hikes:
        if h.length <= degree:
            out[h.length] = normalize(out[h.length] + weight_of(h) * h.weight)
    return out


def zeta_check(g: GraphLike, degree: int, hikes: Optional[List[Hike]] = None,
               tol: float = 1e-8) -> List[Check]:
    """ζ coefficients against hike totals; M·ζ = 1; M against cycle collections."""
    zeta = generating.zeta_series(g, degree)
    mobius = generating.mobius_series(g, degree)
    hikes = hikes if hikes is not None else enumerate_hikes(g, degree)
    checks = _series_checks("zeta=hikes", zeta, _totals(hikes, degree, lambda h: 1), tol)
    product = zeta * mobius
    checks += _series_checks("zeta*mobius=1", product, TruncatedSeries.constant(1, degree), tol)
    checks += _series_checks("mobius=cycle-covers", mobius, mobius_from_cycles(g, degree), tol)
    return checks


def excursion_check(g: GraphLike, u: Sequence[int], degree: int, tol: float = 1e-8) -> List[Check]:
    """E_u coefficients against brute-force excursion totals."""
    e = generating.excursion_matrix(g, u, degree)
    brute = excursion_weights(g, u, degree)
    checks = []
    for a in range(len(u)):
        for b in range(len(u)):
            checks += _series_checks(
                "excursions", e.entry(a, b), list(brute[a, b]), tol, u=list(u), entry=[a, b]
            )
    return checks


def resolvent_block_check(g: GraphLike, u: Sequence[int], degree: int, tol: float = 1e-8) -> List[Check]:
    """(I − E_u)⁻¹ against the (u,u) block of Σ z^k A^k."""
    block = generating.resolvent_block(g, u, degree)
    powers = power_table(as_matrix(g).values(), degree)
    checks = []
    for a in range(len(u)):
        for b in range(len(u)):
            direct = [powers[k][u[a], u[b]] for k in range(degree + 1)]
            checks += _series_checks("resolvent-block", block.entry(a, b), direct, tol,
                                     u=list(u), entry=[a, b])
    return checks


def ru_check(g: GraphLike, u: Sequence[int], degree: int, hikes: Optional[List[Hike]] = None,
             tol: float = 1e-8) -> List[Check]:
    """r_u = ζ/ζ_ū and r_u against hikes whose right divisors all meet u."""
    m = as_matrix(g)
    u = validate_subset(m.n, u)
    ru = generating.ru_series(m, u, degree)
    ratio = generating.zeta_series(m, degree) / generating.induced_zeta(m, complement(m.n, u), degree)
    hikes = hikes if hikes is not None else enumerate_hikes(m, degree)
    filtered = _totals(hikes, degree, lambda h: 1 if right_divisor_filter(h, u) else 0)
    checks = _series_checks("r_u=zeta/zeta_ubar", ru, ratio, tol, u=list(u))
    checks += _series_checks("r_u=filtered-hikes", ru, filtered, tol, u=list(u))
    return checks


def von_mangoldt_check(g: GraphLike, u: Sequence[int], degree: int,
                       hikes: Optional[List[Hike]] = None, tol: float = 1e-8) -> List[Check]:
    """tr R and tr R_u against Λ and Λ_u pyramid totals (degrees ≥ 1)."""
    hikes = hikes if hikes is not None else enumerate_hikes(g, degree)
    full = generating.von_mangoldt_series(g, degree)
    local = generating.von_mangoldt_u_series(g, u, degree)
    checks = _series_checks("trR=Lambda", full, _totals(hikes, degree, von_mangoldt), tol, start=1)
    checks += _series_checks(
        "trR_u=Lambda_u", local, _totals(hikes, degree, lambda h: von_mangoldt_u(h, u)), tol,
        start=1, u=list(u),
    )
    return checks


def log_ru_check(g: GraphLike, u: Sequence[int], degree: int,
                 hikes: Optional[List[Hike]] = None, tol: float = 1e-8) -> List[Check]:
    """log r_u against Σ Λ_u/ℓ_u over pyramids; for a single vertex also
    against closed walks weighted by one over their visits to it.
    """
    m = as_matrix(g)
    u = validate_subset(m.n, u)
    log_ru = generating.log_ru_series(m, u, degree)
    hikes = hikes if hikes is not None else enumerate_hikes(m, degree)
    checks = _series_checks(
        "log r_u=Lambda_u/l_u", log_ru, _totals(hikes, degree, lambda h: log_weight(h, u)), tol, u=list(u)
    )
    if len(u) == 1:
        (i,) = u
        weights = m.values()
        walks = [0] * (degree + 1)
        for k in range(1, degree + 1):
            for walk in closed_walks(m, k, i):
                visits = sum(1 for v in walk[1:] if v == i)
                walks[k] = normalize(walks[k] + Fraction(1, visits) * walk_weight(weights, walk))
        if not m.integral:
            walks = [float(x) for x in walks]
        checks += _series_checks("log r_i=walks/visits", log_ru, walks, tol, u=list(u))
    return checks


def boolean_cumulant_check(g: GraphLike, i: int, degree: int, tol: float = 1e-8) -> List[Check]:
    """B-transform of the rooted moments against single-vertex excursions."""
    b = generating.boolean_cumulants(g, i, degree)
    e = generating.excursion_matrix(g, [i], degree).entry(0, 0)
    return _series_checks("boolean=excursions", b, e, tol, vertex=i)


def pyramid_check(g: GraphLike, degree: int, hikes: Optional[List[Hike]] = None,
                  walk_cap: int = DEFAULT_WALK_CAP) -> List[Check]:
    """Closed walks projecting onto h number Λ(h); positive exactly on pyramids."""
    hikes = hikes if hikes is not None else enumerate_hikes(g, degree)
    counts: Dict[Hike, int] = pyramid_walk_counts(g, degree, walk_cap)
    checks = []
    for h in hikes:
        if h.is_empty:
            continue
        checks.append(compare("walks->pyramid=Lambda", counts.get(h, 0), von_mangoldt(h),
                              context={"hike": str(h)}))
    known = set(hikes)
    stray = [h for h in counts if h not in known]
    checks.append(compare("walk-projections-are-hikes", len(stray), 0))
    return checks


def induced_zeta_witness(g: GraphLike, u: Sequence[int], degree: int) -> Check:
    """ζ of the induced subgraph on u differs from r_u (they coincide only by accident)."""
    zeta_u = generating.induced_zeta(g, u, degree)
    ru = generating.ru_series(g, u, degree)
    differing = [k for k in range(degree + 1) if zeta_u[k] != ru[k]]
    first = differing[0] if differing else degree
    return Check(
        name="zeta_u!=r_u",
        lhs=float(zeta_u[first]),
        rhs=float(ru[first]),
        abs_gap=abs(float(zeta_u[first]) - float(ru[first])),
        tol=0.0,
        passed=bool(differing),
        exact=True,
        context={"u": list(u), "degree": first},
    )


def reconcile_all(g: GraphLike, u: Sequence[int], degree: int, hikes: Optional[List[Hike]] = None,
                  tol: float = 1e-8) -> List[Check]:
    """Every generating-function identity for one (graph, u, L)."""
    m = as_matrix(g)
    u = validate_subset(m.n, u)
    hikes = hikes if hikes is not None else enumerate_hikes(m, degree)
    checks = zeta_check(m, degree, hikes, tol)
    checks += excursion_check(m, u, degree, tol)
    checks += resolvent_block_check(m, u, degree, tol)
    checks += ru_check(m, u, degree, hikes, tol)
    checks += von_mangoldt_check(m, u, degree, hikes, tol)
    checks += log_ru_check(m, u, degree, hikes, tol)
    for i in u:
        checks += boolean_cumulant_check(m, i, degree, tol)
    logger.info(f"Reconciled {len(checks)} series coefficients (n={m.n}, u={list(u)}, L={degree})")
    return checks

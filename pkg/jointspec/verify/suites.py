"""Identity suites run by `verify`.

Each suite takes a SuiteContext and returns (checks, skipped). Random suites
draw one generator per trial, so results do not depend on worker count.
"""

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import networkx as nx
import numpy as np

from ..checks import compare, compare_arrays
from ..graphs import family
from ..graphs.graph import WeightedGraph
from ..hikes import generating, reconcile
from ..hikes.cycles import cycle_weight_sum, enumerate_simple_cycles
from ..hikes.heaps import enumerate_hikes
from ..hikes.series import TruncatedSeries
from ..jsm.basis import basis_independence_check, hadamard_lemma
from ..jsm.measure import build_measure, marginal_distribution, moment_oracle, moment_scale, rooted_spectral_measure
from ..jsm.moments import (
    analytic_minor,
    covariance_matrix,
    cumulant,
    cycle_partition_identity,
    determinant,
    generalized_moment,
    hadamard_bound,
    laplacian,
    marginal_check,
    power_covariance,
    resolvent_moment_series,
    submatrix_charpoly,
    trace_identity,
)
from ..jsm.polynomial import Polynomial
from ..jsm.slater import multivariate_marginal, slater_completeness, slater_probability
from ..linalg.eigen import eigendecompose
from ..linalg.exact import RationalMatrix, leibniz_determinant
from ..linalg.matrix import column_mix
from ..linalg.schur import resolvent_block, schur_block
from ..models import Check
from ..starlimit.limit import limit_law, limit_mgf_from_moments, rademacher_mgf_check
from ..starlimit.product import (
    build_star_product,
    paths_agree,
    star_moment,
    star_resolvent_closed_form,
    support_norm_check,
)
from ..starlimit.report import convergence_report, obata_special_case
from .context import SuiteContext, guarded

logger = logging.getLogger(__name__)

SuiteOutcome = Tuple[List[Check], int]

# Permutation-sum determinants run on every index up to n = 4 and on the
# first few indices of each trial up to n = 6
LEIBNIZ_MAX_N = 6
LEIBNIZ_LARGE_INDICES = 5


# Random inputs

def random_integer_graph(rng: np.random.Generator, n_min: int = 1, n_max: int = 6,
                         low: int = -2, high: int = 2) -> WeightedGraph:
    """Symmetric matrix with uniform integer entries in [low, high]."""
    n = int(rng.integers(n_min, n_max + 1))
    upper = rng.integers(low, high + 1, size=(n, n))
    return WeightedGraph.from_array(np.triu(upper) + np.triu(upper, 1).T, name=f"int{n}")


def random_simple_graph(rng: np.random.Generator, n_min: int = 2, n_max: int = 8) -> WeightedGraph:
    n = int(rng.integers(n_min, n_max + 1))
    return family.gnp(n, float(rng.uniform(0.2, 0.8)), int(rng.integers(2 ** 31)))


def random_simple_spectrum(rng: np.random.Generator, n_min: int = 2, n_max: int = 6) -> WeightedGraph:
    """Gaussian symmetric matrix; its spectrum is simple almost surely."""
    n = int(rng.integers(n_min, n_max + 1))
    while True:
        raw = rng.normal(size=(n, n))
        g = WeightedGraph.from_array((raw + raw.T) / 2, name=f"gauss{n}")
        if eigendecompose(g.matrix).simple_spectrum:
            return g


def random_subset(rng: np.random.Generator, n: int, size: int) -> Tuple[int, ...]:
    return tuple(sorted(int(i) for i in rng.choice(n, size=size, replace=False)))


def _graphs_or(ctx: SuiteContext, default: Callable[[], List[WeightedGraph]]) -> List[WeightedGraph]:
    return [ctx.graph] if ctx.graph is not None else default()


def _flatten(results: List[List[Check]]) -> List[Check]:
    return [c for checks in results for c in checks]


# Suites

def suite_linalg(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or random_integer_graph(rng)

        def run() -> List[Check]:
            m = g.matrix
            k = [int(x) for x in rng.integers(0, 5, size=m.n)]
            mixed = column_mix(m, k)
            floating = mixed.astype(float)
            exact = determinant(mixed)
            checks = [compare("det-float=exact", float(np.linalg.det(floating)), exact,
                              tol.float_identity, scale=hadamard_bound(floating), context={"k": k})]
            eig = eigendecompose(m, sweeps=ctx.caps.jacobi_sweeps, class_tol=tol.eig_class)
            frob = m.frobenius
            checks.append(compare("eigen-reconstruct", float(np.linalg.norm(eig.reconstruct() - m.entries)), 0.0,
                                  tol.reconstruct, scale=frob))
            checks.append(compare_arrays("jacobi=eigh", eig.eigenvalues, np.linalg.eigvalsh(m.entries),
                                         tol.eig_residual, scale=frob))
            checks.append(compare("orthogonality", float(np.max(np.abs(eig.basis.T @ eig.basis - np.eye(m.n)))),
                                  0.0, tol.orth))
            if m.n >= 2:
                u = random_subset(rng, m.n, int(rng.integers(1, m.n)))
                z = float(rng.uniform(-1, 1)) * 0.5 / max(1.0, frob)
                checks.append(compare_arrays("schur=direct", schur_block(m, u, z), resolvent_block(m, u, z),
                                             tol.schur, context={"u": list(u), "z": z}))
            return checks

        return guarded("linalg", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(100))), 0


def suite_oracle(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None and ctx.graph.n > ctx.caps.measure_dim:
        return [], 1

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or random_integer_graph(rng)

        def run() -> List[Check]:
            m = g.matrix
            measure = build_measure(eigendecompose(m), cap=ctx.caps.measure_dim)
            checks = [compare("mass", measure.total_mass, 1.0, tol.mass)]
            for index in range(20):
                k = [int(x) for x in rng.integers(0, 5, size=m.n)]
                value = generalized_moment(m, k)
                if m.integral and (m.n <= 4 or (m.n <= LEIBNIZ_MAX_N and index < LEIBNIZ_LARGE_INDICES)):
                    permutation_sum = leibniz_determinant(column_mix(m, k))
                    checks.append(compare("moment=leibniz", value, permutation_sum, context={"k": k}))
                checks.append(compare("moment=atoms", moment_oracle(measure, k), value, tol.oracle_float,
                                      scale=moment_scale(measure, k), context={"k": k}))
            return checks

        return guarded("oracle", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(200))), 0


def suite_marginals(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    checks: List[Check] = []
    for g in _graphs_or(ctx, lambda: family.standard_family(5)):
        def run(g=g) -> List[Check]:
            out = []
            eig = eigendecompose(g.matrix)
            measure = build_measure(eig) if g.n <= ctx.caps.measure_dim else None
            for i in range(g.n):
                report = marginal_check(g, i, 8, tol.float_identity, cap=ctx.caps.measure_dim)
                out.append(compare("marginals", report.max_deviation, 0.0, tol.float_identity,
                                   context={"vertex": i}))
                if measure is not None:
                    law = marginal_distribution(measure, i)
                    rooted = rooted_spectral_measure(eig, i)
                    for c, (_, weight) in enumerate(rooted):
                        out.append(compare("rooted=marginal", law.get(c, 0.0), weight, tol.float_identity,
                                           context={"vertex": i, "class": c}))
            return out
        checks += guarded("marginals", g, run)
    return checks, 0


def suite_laplacian(ctx: SuiteContext) -> SuiteOutcome:
    if ctx.graph is not None and not ctx.graph.simple:
        return [], 1

    def trial(t: int) -> List[Check]:
        g = ctx.graph or random_simple_graph(ctx.rng(t))
        return guarded("laplacian", g, lambda: [
            compare_arrays("covariance=laplacian", covariance_matrix(g), laplacian(g))
        ])

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(50))), 0


def suite_power_covariance(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None and not ctx.graph.simple:
        return [], 1

    def trial(t: int) -> List[Check]:
        g = ctx.graph or random_simple_graph(ctx.rng(t))

        def run() -> List[Check]:
            out = []
            for i, j in itertools.combinations(range(g.n), 2):
                for k in range(6):
                    cov = power_covariance(g, i, j, k, tol.float_identity)
                    out.append(Check(name="power-covariance<=0", lhs=float(cov), rhs=0.0,
                                     abs_gap=max(0.0, float(cov)), tol=0.0, passed=cov <= 0,
                                     exact=True, context={"i": i, "j": j, "k": k}))
            return out

        return guarded("power-covariance", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(50))), 0


def suite_analytic(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or random_integer_graph(rng, n_max=5)

        def run() -> List[Check]:
            u = random_subset(rng, g.n, int(rng.integers(1, min(3, g.n) + 1)))
            degree = int(rng.integers(0, 5))
            f = Polynomial.of([int(c) for c in rng.integers(-2, 3, size=degree + 1)])
            context = {"u": list(u), "f": list(f.coefficients)}
            lhs, rhs = analytic_minor(g, u, f)
            out = [compare("det f(A)_uu=E prod f", lhs, rhs, tol.float_identity, scale=abs(float(lhs)),
                           context=context)]
            lhs, rhs = trace_identity(g, u, f)
            out.append(compare("tr f(A)_uu=E sum f", lhs, rhs, tol.float_identity, scale=abs(float(lhs)),
                               context=context))
            if len(u) <= 2:
                poly = submatrix_charpoly(g, u, f, tol.float_identity)
                out.append(compare("charpoly-monic", poly.coefficients[-1], 1, context=context))
            return out

        return guarded("analytic", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(100))), 0


def suite_slater(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None:
        eig = eigendecompose(ctx.graph.matrix)
        if not eig.simple_spectrum or ctx.graph.n > ctx.caps.measure_dim:
            return [], 1

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or random_simple_spectrum(rng)

        def run() -> List[Check]:
            eig = eigendecompose(g.matrix)
            measure = build_measure(eig, cap=ctx.caps.measure_dim)
            out = []
            for size in range(1, min(3, g.n) + 1):
                u = random_subset(rng, g.n, size)
                total = 0.0
                for v in itertools.combinations(range(g.n), size):
                    total += slater_probability(eig, u, v, measure, tol.slater)
                out.append(compare("slater-probabilities-sum", total, 1.0, tol.slater, context={"u": list(u)}))
                out.append(compare("slater-completeness", slater_completeness(eig, u), 1.0, tol.slater,
                                   context={"u": list(u)}))
                s = random_subset(rng, g.n, size)
                tt = random_subset(rng, g.n, size)
                by_sigma = sum(multivariate_marginal(eig, s, tt, sigma, measure, tol.slater)
                               for sigma in itertools.permutations(range(size)))
                out.append(compare("sum over sigma=slater", by_sigma,
                                   slater_probability(eig, s, tt, measure, tol.slater), tol.slater,
                                   context={"s": list(s), "t": list(tt)}))
            return out

        return guarded("slater", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(20))), 0


def _random_rational_triple(rng: np.random.Generator, n: int = 4):
    sizes = []
    left = n
    while left:
        s = int(rng.integers(1, left + 1))
        sizes.append(s)
        left -= s
    block_of = [b for b, s in enumerate(sizes) for _ in range(s)]

    def rational() -> Fraction:
        return Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 6)))

    m = RationalMatrix.from_rows([[rational() for _ in range(n)] for _ in range(n)])
    c = RationalMatrix.from_rows([[int(block_of[i] == block_of[j]) for j in range(n)] for i in range(n)])
    b = RationalMatrix.from_rows([
        [rational() if block_of[i] == block_of[j] else 0 for j in range(n)] for i in range(n)
    ])
    return m, b, c


def suite_basis(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    skipped = 0

    def graphs() -> List[WeightedGraph]:
        out = [family.star(3)]
        for t in range(10):
            rng = ctx.rng(1000 + t)
            base = family.gnp(int(rng.integers(2, 5)), float(rng.uniform(0.3, 0.9)), int(rng.integers(2 ** 31)))
            out.append(family.disjoint_copies(base, 2))
        return out

    def rotate(idx_graph) -> List[Check]:
        idx, g = idx_graph

        def run() -> List[Check]:
            report = basis_independence_check(g, ctx.trials(20), ctx.config.seed * 7919 + idx, tol.basis)
            if report.skipped:
                return []
            return [compare("basis-independence", report.max_deviation, 0.0, tol.basis,
                            context={"trials": report.trials})]

        return guarded("basis", g, run)

    candidates = _graphs_or(ctx, graphs)
    if ctx.graph is not None and ctx.graph.n > ctx.caps.measure_dim:
        return [], 1
    checks = _flatten(ctx.map(lambda i: rotate((i, candidates[i])), len(candidates)))
    if ctx.graph is not None and not checks:
        skipped += 1

    for t in range(ctx.trials(100)):
        m, b, c = _random_rational_triple(ctx.rng(2000 + t))
        lhs, rhs = hadamard_lemma(m, b, c)
        gap = max(abs(x - y) for rl, rr in zip(lhs.rows, rhs.rows) for x, y in zip(rl, rr))
        checks.append(compare("hadamard-lemma", gap, 0, context={"trial": t}))
    return checks, skipped


def suite_cumulant(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol

    def graphs() -> List[WeightedGraph]:
        out = family.standard_family(6)
        out += [random_integer_graph(ctx.rng(t), n_min=2, n_max=6) for t in range(ctx.trials(20))]
        return out

    checks: List[Check] = []
    for g in _graphs_or(ctx, graphs):
        def run(g=g) -> List[Check]:
            out = []
            cycles = enumerate_simple_cycles(g, max_length=4)
            for size in range(1, min(4, g.n) + 1):
                for u in itertools.combinations(range(g.n), size):
                    kappa = cumulant(g, u, cycles, tol.float_identity)
                    expected = (-1) ** (size - 1) * cycle_weight_sum(cycles, u)
                    out.append(compare("cumulant=cycles", kappa, expected, tol.float_identity,
                                       scale=abs(float(expected)), context={"u": list(u)}))
                    lhs, rhs = cycle_partition_identity(g, u, cycles)
                    out.append(compare("det(-A_uu)=cycle-partitions", lhs, rhs, tol.float_identity,
                                       scale=abs(float(lhs)), context={"u": list(u)}))
            return out
        checks += guarded("cumulant", g, run)
    return checks, 0


def _merge_sets(n: int, max_size: int = 2) -> List[Tuple[int, ...]]:
    return [u for size in range(1, min(max_size, n - 1) + 1) for u in itertools.combinations(range(n), size)]


def _multi_indices(p: int, total: int) -> List[Tuple[int, ...]]:
    return [k for k in itertools.product(range(total + 1), repeat=p) if 0 < sum(k) <= total]


def suite_clt(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    n_grid = ctx.config.n_grid
    direct_max = ctx.caps.star_direct_max_n
    graphs = _graphs_or(ctx, lambda: [family.path(2), family.path(3), family.complete(3), family.complete(4)])
    cases = [(g, u, k) for g in graphs for u in _merge_sets(g.n) for k in _multi_indices(len(u), 6)]

    def run_case(idx: int) -> List[Check]:
        g, u, k = cases[idx]

        def run() -> List[Check]:
            report = convergence_report(g, u, k, n_grid, tol.clt_final, tol.clt_slope, direct_max)
            context = {"u": list(u), "k": list(k)}
            last = report.rows[-1]
            if report.odd and report.rate_bound is not None:
                scaled_gap = float(np.sqrt(last.n) * last.gap)
                out = [Check(name="clt-odd-rate", lhs=scaled_gap, rhs=report.rate_bound,
                             abs_gap=max(0.0, scaled_gap - report.rate_bound), tol=tol.clt_final,
                             passed=report.final_gap_ok, context=context)]
            else:
                out = [Check(name="clt-final-gap", lhs=last.scaled_moment, rhs=last.limit_moment,
                             abs_gap=last.gap, tol=tol.clt_final, passed=report.final_gap_ok, context=context)]
            out.append(Check(name="clt-monotone", lhs=report.rows[-1].gap, rhs=report.rows[0].gap,
                             abs_gap=0.0, tol=0.0, passed=report.monotone_ok, context=context))
            if report.slope is not None:
                out.append(Check(name="clt-slope", lhs=report.slope, rhs=tol.clt_slope,
                                 abs_gap=max(0.0, report.slope - tol.clt_slope), tol=0.0,
                                 passed=report.slope_ok, context=context))
            return out

        return guarded("clt", g, run)

    checks = _flatten(ctx.map(run_case, len(cases)))

    for g in graphs:
        for u in _merge_sets(g.n):
            k = (2,) * len(u)
            checks += guarded("clt-paths", g, lambda g=g, u=u, k=k: [paths_agree(g, u, k, 100, tol.float_identity)])

    stars = [ctx.graph] if ctx.graph is not None else [family.star(k) for k in range(1, 6)]
    for g in stars:
        def obata(g=g) -> List[Check]:
            reports = obata_special_case(g, 0, n_grid, 6, tol.clt_final, tol.clt_slope, direct_max)
            return [Check(name="obata", lhs=r.rows[-1].scaled_moment, rhs=r.rows[-1].limit_moment,
                          abs_gap=r.rows[-1].gap, tol=tol.clt_final, passed=r.final_gap_ok,
                          context={"k": r.k}) for r in reports]
        checks += guarded("obata", g, obata)
    return checks, 0


def suite_star_resolvent(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None and ctx.graph.n < 2:
        return [], 1
    pool = [family.path(2), family.path(3), family.complete(3), family.complete(4), family.cycle(4), family.star(3)]

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or pool[int(rng.integers(len(pool)))]

        def run() -> List[Check]:
            u = random_subset(rng, g.n, int(rng.integers(1, g.n)))
            n = int(rng.integers(1, 21))
            sp = build_star_product(g, u, n)
            z = float(rng.uniform(-1, 1)) * 0.5 / (np.sqrt(n) * max(1.0, g.matrix.frobenius))
            context = {"u": list(u), "n": n, "z": z}
            out = [compare_arrays("star-schur=closed-form", schur_block(sp.assembled, tuple(range(sp.p)), z),
                                  star_resolvent_closed_form(sp, z), tol.schur, context=context)]
            law = limit_law(g, u)
            out.append(compare("D-psd", min(0.0, float(law.eig.eigenvalues[0])), 0.0, tol.float_identity,
                               scale=law.d.frobenius, context=context))
            out += support_norm_check(sp, tol.float_identity, ctx.caps.measure_dim)
            if g.loopless and nx.is_bipartite(g.to_networkx()):
                # G^(n) stays bipartite, so every odd total degree vanishes
                for k in _multi_indices(len(u), 5):
                    if sum(k) % 2:
                        out.append(compare("odd-moment=0", star_moment(sp, k), 0, tol.float_identity,
                                           context={**context, "k": list(k)}))
            return out

        return guarded("star-resolvent", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(100))), 0


def suite_mgf(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None and ctx.graph.n < 2:
        return [], 1
    pool = [family.path(2), family.path(3), family.complete(3), family.complete(4), family.star(3)]

    def trial(t: int) -> List[Check]:
        rng = ctx.rng(t)
        g = ctx.graph or pool[int(rng.integers(len(pool)))]

        def run() -> List[Check]:
            u = random_subset(rng, g.n, int(rng.integers(1, min(2, g.n - 1) + 1)))
            law = limit_law(g, u, cap=ctx.caps.measure_dim)
            z = [float(x) for x in rng.uniform(-0.1, 0.1, size=len(u))]
            lhs, rhs = rademacher_mgf_check(law, z, 40, tol.mgf, tol.mgf_tail)
            moments = limit_mgf_from_moments(law, z, 40)
            context = {"u": list(u), "z": z}
            return [compare("rademacher-mgf", lhs, rhs, tol.mgf, context=context),
                    compare("mgf=moment-series", moments, rhs, tol.mgf, context=context)]

        return guarded("mgf", g, run)

    return _flatten(ctx.map(trial, 1 if ctx.graph else ctx.trials(20))), 0


def hike_degree(g: WeightedGraph, trunc: int) -> int:
    """Truncation used for hike reconciliation: up to 8 for n ≤ 4, 6 beyond."""
    return min(trunc, 8 if g.n <= 4 else 6)


def closed_form_checks(degree: int = 10) -> List[Check]:
    k3 = family.complete(3)
    denominator = TruncatedSeries.of([1, 0, -3, -2], degree)
    numerator = TruncatedSeries.of([1, 0, -1], degree)
    zeta = generating.zeta_series(k3, degree)
    ru = generating.ru_series(k3, [0], degree)
    checks = [compare(f"K3 zeta[z^{k}]", zeta[k], denominator.inverse()[k]) for k in range(degree + 1)]
    checks += [compare(f"K3 r_1[z^{k}]", ru[k], (numerator / denominator)[k]) for k in range(degree + 1)]
    return checks


def suite_hikes(ctx: SuiteContext) -> SuiteOutcome:
    tol = ctx.tol
    if ctx.graph is not None and ctx.graph.n > 6:
        return [], 1
    graphs = _graphs_or(ctx, lambda: family.standard_family(5))

    def per_graph(idx: int) -> List[Check]:
        g = graphs[idx]

        def run() -> List[Check]:
            degree = hike_degree(g, ctx.config.trunc)
            hikes = enumerate_hikes(g, degree, cap=ctx.caps.hike_length)
            subsets = [(i,) for i in range(g.n)] + [(0, 1), tuple(range(g.n))]
            out = []
            for u in subsets:
                out += reconcile.reconcile_all(g, u, degree, hikes, tol.float_identity)
                short = min(degree, 6)
                out += [compare("E prod (1-zX)^-1 = r_u", a, b, tol.float_identity, context={"u": list(u)})
                        for a, b in zip(resolvent_moment_series(g, u, short).coefficients,
                                        generating.ru_series(g, u, short).coefficients)]
            if g.n <= 4:
                out += reconcile.pyramid_check(g, min(degree, 6), [h for h in hikes if h.length <= 6],
                                              ctx.caps.walk_length)
            return out

        return guarded("hikes", g, run)

    checks = _flatten(ctx.map(per_graph, len(graphs)))
    if ctx.graph is None:
        checks.append(reconcile.induced_zeta_witness(family.complete(3), [0], 6))
        checks += closed_form_checks(10)
    return checks, 0


SUITES: Dict[str, Callable[[SuiteContext], SuiteOutcome]] = {
    "linalg": suite_linalg,
    "oracle": suite_oracle,
    "marginals": suite_marginals,
    "laplacian": suite_laplacian,
    "power-covariance": suite_power_covariance,
    "analytic": suite_analytic,
    "slater": suite_slater,
    "basis": suite_basis,
    "cumulant": suite_cumulant,
    "clt": suite_clt,
    "star-resolvent": suite_star_resolvent,
    "mgf": suite_mgf,
    "hikes": suite_hikes,
}

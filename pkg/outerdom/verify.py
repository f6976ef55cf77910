"""Acceptance suites run over graph corpora."""

import concurrent.futures
import functools
import logging
import math
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar, Union

import msgspec

from outerdom.bounds import bounds_report, essential_pair_count, thm11_bound
from outerdom.config import OuterdomConfig
from outerdom.domination import (
    SimpleGraph,
    gamma_exact_bb,
    gamma_mop_dp,
    is_dominating,
    minimum_dominating_sets,
)
from outerdom.exceptions import (
    BoundViolatedError,
    NoHamiltonCycleError,
    NotFoundError,
    OuterdomError,
)
from outerdom.generators import CorpusKind, CorpusMode, CorpusSpec, iter_corpus
from outerdom.hamiltonian import (
    HamTriangulation,
    PipelineReport,
    dominate_triangulation,
    find_good_cycle,
    full_graph,
    good_cycle_check,
    habo_graph,
    side_report,
)
from outerdom.mop import MopGraph, degree_two_vertices, inner_dual, is_striped
from outerdom.reductions import (
    MIN_CONTRACT_N,
    claim_candidates,
    dominate_mop,
    find_applicable,
    lift,
    realize,
    relation_problems,
    verify_trace,
)
from outerdom.value_objects import SearchTarget, Side, Suite

logger = logging.getLogger(__name__)

Graph = Union[MopGraph, HamTriangulation]
T = TypeVar("T")

# suites whose anomalies fail the run as well as their violations
STRICT_ANOMALY_SUITES = frozenset({Suite.THM12})

# random graphs kept per sampled suite unless a smaller total is asked for
ACCEPTANCE_TOTALS: Dict[Suite, int] = {
    Suite.ORACLE: 500,
    Suite.THM32: 200,
    Suite.PIPELINE: 1000,
}


class CheckResult(msgspec.Struct):
    """Outcome of one suite on one graph."""

    violations: List[str] = msgspec.field(default_factory=list)
    anomalies: List[str] = msgspec.field(default_factory=list)
    skipped: bool = False


class VerifyReport(msgspec.Struct):
    """Outcome of one suite over a corpus."""

    suite: Suite
    checked: int
    skipped: int
    violations: List[str]
    anomalies: List[str]

    @property
    def ok(self) -> bool:
        """
        Return True if the suite passed.

        A suite fails on any violation. The reduction engine suite also fails
        on any anomaly.
        """
        if self.suite in STRICT_ANOMALY_SUITES and self.anomalies:
            return False
        return not self.violations


def _name(graph: Graph) -> str:
    if isinstance(graph, MopGraph):
        return f"mop n={graph.n} chords={list(graph.chords)}"
    return f"ht n={graph.n} inner={list(graph.inner)} outer={list(graph.outer)}"


def check_oracle(graph: MopGraph, config: OuterdomConfig) -> CheckResult:
    """Compare the MOP DP with branch and bound."""
    result = CheckResult()
    simple = SimpleGraph.from_mop(graph)
    dp = gamma_mop_dp(graph)
    exact = gamma_exact_bb(simple, limit=config.limit_bb)
    if dp.size != exact.size:
        result.violations.append(f"dp {dp.size} != exact {exact.size}")
    if not is_dominating(simple, dp.vertices):
        result.violations.append("dp set does not dominate")
    if dp.size > math.ceil(graph.n / 3):
        result.violations.append(f"gamma {dp.size} > ceil(n/3)")
    return result


def check_thm11(graph: MopGraph, config: OuterdomConfig) -> CheckResult:  # noqa: ARG001
    """Check gamma <= (n + t) / 4."""
    result = CheckResult()
    t = len(degree_two_vertices(graph))
    gamma = gamma_mop_dp(graph).size
    if gamma > thm11_bound(graph.n, t):
        result.violations.append(f"gamma {gamma} > ({graph.n} + {t}) / 4")
    return result


def check_thm12(graph: MopGraph, config: OuterdomConfig) -> CheckResult:  # noqa: ARG001
    """Check gamma <= ceil((n + k) / 4) and run the reduction engine."""
    result = CheckResult()
    report = bounds_report(graph, with_gamma=True)
    if not report.thm12_ok:
        result.violations.append(f"gamma {report.gamma} > {report.bound_thm12}")
    try:
        trace = dominate_mop(graph)
    except BoundViolatedError as exc:
        result.violations.append(str(exc))
        return result
    result.anomalies.extend(anomaly.message for anomaly in trace.anomalies)
    result.violations.extend(verify_trace(trace))
    return result


def check_reductions(graph: MopGraph, config: OuterdomConfig) -> CheckResult:
    """
    Check every candidate step and its lifts.

    Each step must meet its relations, and every minimum dominating set of the
    reduced graph must lift to a dominating set of the original.

    The in-proof steps are only claimed for graphs on at least seven vertices
    that no R1..R4 step applies to. There a broken relation is a violation;
    on other graphs it is recorded as an anomaly.
    """
    result = CheckResult()
    applicable = find_applicable(graph)
    irreducible = not applicable and graph.n >= MIN_CONTRACT_N
    for candidate in [*applicable, *claim_candidates(graph)]:
        try:
            step = realize(candidate)
        except OuterdomError as exc:
            result.violations.append(f"{candidate.kind.value}: {exc}")
            continue
        problems = relation_problems(step)
        if step.kind.is_claim and not irreducible:
            result.anomalies.extend(problems)
        else:
            result.violations.extend(problems)
        assert step.post_graph is not None  # noqa: S101
        post = SimpleGraph.from_mop(step.post_graph)
        for post_set in minimum_dominating_sets(post, limit=config.limit_bb):
            try:
                lift(post_set, step)
            except OuterdomError as exc:
                result.violations.append(f"{step.kind.value} {step.anchor}: {exc}")
    return result


def check_lemma31(graph: HamTriangulation, config: OuterdomConfig) -> CheckResult:
    """Check that a good Hamilton cycle exists when gamma >= 2."""
    result = CheckResult()
    full = full_graph(graph)
    if gamma_exact_bb(full, limit=config.limit_bb).size < 2:  # noqa: PLR2004
        result.skipped = True
        return result
    try:
        find_good_cycle(full, limit=config.limit_hamilton)
    except (NotFoundError, NoHamiltonCycleError) as exc:
        result.violations.append(str(exc))
    return result


def check_thm32(graph: HamTriangulation, config: OuterdomConfig) -> CheckResult:
    """Check gamma(K) <= ceil(2n / 7) whenever K has (n + 1) / 2 2-chords."""
    result = CheckResult()
    habo = habo_graph(graph)
    if 2 * habo.chord_count < graph.n + 1 or graph.n > config.limit_bb:
        result.skipped = True
        return result
    gamma = gamma_exact_bb(habo.graph, limit=config.limit_bb).size
    if gamma > math.ceil(2 * graph.n / 7):
        result.violations.append(f"gamma(K) {gamma} > ceil(2n/7)")
    return result


def check_pipeline(graph: HamTriangulation, config: OuterdomConfig) -> CheckResult:
    """Run the triangulation pipeline on graphs whose cycle is good."""
    result = CheckResult()
    if not good_cycle_check(graph):
        result.skipped = True
        return result
    try:
        solution, _ = dominate_triangulation(
            graph, limit_bb=config.limit_bb, banded_k=config.banded_k
        )
    except BoundViolatedError as exc:
        result.violations.append(str(exc))
        if isinstance(exc.payload, PipelineReport) and exc.payload.near_miss:
            result.anomalies.append(
                f"near miss: size {exc.payload.size} = ceil(5n/16)"
            )
        return result
    if not is_dominating(full_graph(graph), solution.vertices):
        result.violations.append("pipeline set does not dominate")
    swapped, _ = dominate_triangulation(
        graph.swapped(), limit_bb=config.limit_bb, banded_k=config.banded_k
    )
    if swapped.size != solution.size:
        result.violations.append(
            f"side swap changed size {solution.size} -> {swapped.size}"
        )
    return result


def _check_mop_structure(graph: MopGraph) -> List[str]:
    problems = []
    if len(graph.edges()) != 2 * graph.n - 3:
        problems.append("MOP edge count is not 2n - 3")
    dual = inner_dual(graph)
    if len(dual.nodes) != graph.n - 2 or not dual.is_tree():
        problems.append("inner dual is not a tree on n - 2 triangles")
    if is_striped(graph) != dual.is_path():
        problems.append("striped does not match a path dual")
    if graph.n >= 4:  # noqa: PLR2004
        t = len(degree_two_vertices(graph))
        if t < 2 or (is_striped(graph) and t != 2):  # noqa: PLR2004
            problems.append(f"unexpected number of degree-2 vertices {t}")
        if essential_pair_count(graph) > t:
            problems.append("k exceeds t")
    return problems


def check_structure(graph: Graph, config: OuterdomConfig) -> CheckResult:  # noqa: ARG001
    """Check the edge-count, dual, degree-2 and pigeonhole invariants."""
    result = CheckResult()
    if isinstance(graph, MopGraph):
        result.violations.extend(_check_mop_structure(graph))
        return result
    if len(full_graph(graph).edges) != 3 * graph.n - 6:
        result.violations.append("triangulation edge count is not 3n - 6")
    try:
        counts = [side_report(graph, side).chord_count for side in Side]
    except OuterdomError as exc:
        result.violations.append(str(exc))
        return result
    if 2 * sum(counts) <= graph.n and 4 * min(counts) > graph.n:
        result.violations.append(f"pigeonhole fails for 2-chord counts {counts}")
    return result


Checker = Callable[..., CheckResult]

CHECKS: Dict[Suite, Checker] = {
    Suite.ORACLE: check_oracle,
    Suite.THM11: check_thm11,
    Suite.THM12: check_thm12,
    Suite.REDUCTIONS: check_reductions,
    Suite.LEMMA31: check_lemma31,
    Suite.THM32: check_thm32,
    Suite.PIPELINE: check_pipeline,
    Suite.STRUCTURE: check_structure,
}


def default_corpora(
    suite: Suite,
    n_max: Optional[int],
    seed: int,
    total: int = 0,
) -> List[CorpusSpec]:
    """
    Return the corpora a suite runs over when no input file is given.

    Sampled suites keep `ACCEPTANCE_TOTALS[suite]` random graphs unless `total`
    asks for another number.
    """
    mop, ht = CorpusKind.MOP, CorpusKind.HAM_TRIANGULATION
    exhaustive, sampled = CorpusMode.EXHAUSTIVE, CorpusMode.RANDOM
    total = total or ACCEPTANCE_TOTALS.get(suite, 0)
    if suite is Suite.ORACLE:
        return [
            CorpusSpec(mop, 3, n_max or 10, exhaustive),
            CorpusSpec(mop, 11, 25, sampled, seed, total=total),
        ]
    if suite in {Suite.THM11, Suite.THM12}:
        return [CorpusSpec(mop, 4, n_max or 13, exhaustive)]
    if suite is Suite.REDUCTIONS:
        return [CorpusSpec(mop, 4, n_max or 12, exhaustive)]
    if suite is Suite.LEMMA31:
        return [CorpusSpec(ht, 4, n_max or 9, exhaustive)]
    if suite is Suite.THM32:
        return [CorpusSpec(ht, 4, n_max or 26, sampled, seed, total=total)]
    if suite is Suite.PIPELINE:
        return [CorpusSpec(ht, 23, n_max or 60, sampled, seed, total=total)]
    return [
        CorpusSpec(mop, 3, n_max or 10, exhaustive),
        CorpusSpec(ht, 4, min(n_max or 7, 9), exhaustive),
    ]


def _many_two_chords(graph: Graph) -> bool:
    return (
        isinstance(graph, HamTriangulation)
        and 2 * habo_graph(graph).chord_count >= graph.n + 1
    )


def _good_cycle(graph: Graph) -> bool:
    return isinstance(graph, HamTriangulation) and good_cycle_check(graph)


# draws counted towards the total of a sampled suite
SAMPLE_FILTERS: Dict[Suite, Callable[[Graph], bool]] = {
    Suite.THM32: _many_two_chords,
    Suite.PIPELINE: _good_cycle,
}


def _map(
    func: Callable[[Graph], T],
    graphs: Sequence[Graph],
    config: OuterdomConfig,
) -> List[T]:
    """Apply `func` to every graph, in a process pool if configured."""
    if not config.parallel:
        return [func(graph) for graph in graphs]
    logger.debug("mapping %d graphs over %d workers", len(graphs), config.workers)
    with concurrent.futures.ProcessPoolExecutor(
        max_workers=config.workers
    ) as executor:
        return list(executor.map(func, graphs, chunksize=32))


def run_suite(
    suite: Suite,
    graphs: Iterable[Graph],
    config: Optional[OuterdomConfig] = None,
) -> VerifyReport:
    """
    Run one suite over `graphs`.

    With more than one worker the graphs go to a process pool; results are
    merged in input order, so the report does not depend on the worker count.
    """
    config = config or OuterdomConfig()
    check = functools.partial(CHECKS[suite], config=config)
    report = VerifyReport(suite, 0, 0, [], [])
    graphs = list(graphs)
    results = _map(check, graphs, config)
    for graph, result in zip(graphs, results):
        if result.skipped:
            report.skipped += 1
            continue
        report.checked += 1
        report.violations.extend(f"{_name(graph)}: {v}" for v in result.violations)
        report.anomalies.extend(f"{_name(graph)}: {a}" for a in result.anomalies)
    for violation in report.violations:
        logger.error("%s: %s", suite.value, violation)
    return report


def run_default_suite(
    suite: Suite,
    config: Optional[OuterdomConfig] = None,
    n_max: Optional[int] = None,
    total: int = 0,
) -> VerifyReport:
    """Run a suite over its default corpora."""
    config = config or OuterdomConfig()
    graphs: List[Graph] = []
    total = total or config.corpus_total
    for spec in default_corpora(suite, n_max, config.seed, total):
        limit = (
            config.limit_enumerate
            if spec.kind is CorpusKind.MOP
            else config.limit_enumerate_ht
        )
        graphs.extend(iter_corpus(spec, limit=limit, keep=SAMPLE_FILTERS.get(suite)))
    return run_suite(suite, graphs, config)


def exceeds_li_bound(graph: Graph, config: OuterdomConfig) -> bool:  # noqa: ARG001
    """Return True for a MOP whose domination number exceeds (n + k) / 4."""
    if not isinstance(graph, MopGraph):
        return False
    return 4 * gamma_mop_dp(graph).size > graph.n + essential_pair_count(graph)


def exceeds_quarter(graph: Graph, config: OuterdomConfig) -> bool:
    """Return True for a triangulation whose domination number exceeds n / 4."""
    if not isinstance(graph, HamTriangulation):
        return False
    full = full_graph(graph)
    return 4 * gamma_exact_bb(full, limit=config.limit_bb).size > graph.n


SEARCHES: Dict[SearchTarget, Callable[[Graph, OuterdomConfig], bool]] = {
    SearchTarget.LI: exceeds_li_bound,
    SearchTarget.MATHESON_TARJAN: exceeds_quarter,
}


def search_counterexamples(
    graphs: Iterable[Graph],
    target: SearchTarget = SearchTarget.LI,
    config: Optional[OuterdomConfig] = None,
) -> List[Graph]:
    """
    Return the graphs that violate the bound named by `target`.

    `SearchTarget.LI` looks for MOPs with gamma > (n + k) / 4 and
    `SearchTarget.MATHESON_TARJAN` for triangulations with gamma > n / 4.
    Graphs of the other kind are never reported.
    """
    config = config or OuterdomConfig()
    graphs = list(graphs)
    flags = _map(functools.partial(SEARCHES[target], config=config), graphs, config)
    return [graph for graph, flag in zip(graphs, flags) if flag]

"""
Certified reductions of maximal outerplane graphs.

Each step removes a clockwise run of boundary positions, either deleting it or
contracting it to a single new vertex x. The step records how to turn a
dominating set of the smaller graph back into one of the larger graph
(a `LiftRule`), and `dominate_mop` chains steps down to a base case and lifts
the base solution back up, keeping |D| <= ceil((n + k) / 4).
"""

import fractions
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

import msgspec

from outerdom.bounds import essential_pair_count, thm11_bound, thm12_bound
from outerdom.domination import (
    DominatingSet,
    SimpleGraph,
    dominating_vertex,
    gamma_mop_dp,
    is_dominating,
)
from outerdom.exceptions import (
    BoundViolatedError,
    CertificateError,
    InvalidGraphError,
    InvalidInputSetError,
    OuterdomError,
    PreconditionViolatedError,
    ResultNotMaximalOuterplaneError,
    TooSmallError,
)
from outerdom.mop import (
    MopGraph,
    build_mop,
    degree_two_vertices,
    elementary_sections,
    internal_triangles,
    is_striped,
    maximal_elementary_sections,
    sections,
    segment_length,
)
from outerdom.value_objects import BaseResolution, Rational, ReductionKind

logger = logging.getLogger(__name__)

SMALL_BASE = 6
MIN_CONTRACT_N = 7

RULE_ORDER = (
    ReductionKind.R1,
    ReductionKind.R2,
    ReductionKind.R3,
    ReductionKind.R4,
    ReductionKind.CLAIM1_DELETE,
    ReductionKind.CLAIM2_CONTRACT_BOTH,
    ReductionKind.CLAIM2_CONTRACT_ONE,
    ReductionKind.FINAL_CONTRACT,
)

# vertices removed by each kind; None means "at least four"
VERTICES_REMOVED: Dict[ReductionKind, Optional[int]] = {
    ReductionKind.R1: 4,
    ReductionKind.R2: None,
    ReductionKind.R3: 4,
    ReductionKind.R4: 4,
    ReductionKind.CLAIM1_DELETE: 3,
    ReductionKind.CLAIM2_CONTRACT_BOTH: 4,
    ReductionKind.CLAIM2_CONTRACT_ONE: 3,
    ReductionKind.FINAL_CONTRACT: 3,
}


class LiftRule(msgspec.Struct, frozen=True):
    """
    How a dominating set of the reduced graph is lifted.

    Post-graph vertices standing for a single pre-graph position are kept;
    the contracted vertex x is dropped. Then `present` is added if the
    post-graph vertex containing `trigger` is in the set, `absent` otherwise.
    A zero trigger makes the rule unconditional.
    """

    name: str
    trigger: int
    present: Tuple[int, ...]
    absent: Tuple[int, ...]


class ReductionStep(msgspec.Struct, frozen=True):
    """One reduction, as a candidate or, once applied, with its result."""

    kind: ReductionKind
    anchor: Tuple[int, ...]
    first: int
    last: int
    contract: bool
    lift_rule: LiftRule
    pre_graph: MopGraph
    post_graph: Optional[MopGraph] = None
    vertex_map: Tuple[Tuple[int, ...], ...] = ()
    n_before: int = 0
    k_before: int = 0
    n_after: int = 0
    k_after: int = 0

    @property
    def applied(self) -> bool:
        """Return True once the post graph has been computed."""
        return self.post_graph is not None

    @property
    def key(self) -> Tuple[ReductionKind, Tuple[int, ...], int, int, bool]:
        """Return the identity of the step independent of its result."""
        return (self.kind, self.anchor, self.first, self.last, self.contract)


class Anomaly(msgspec.Struct, frozen=True):
    """Something the engine met that the proof says cannot happen."""

    stage: str
    n: int
    message: str


class ReductionTrace(msgspec.Struct):
    """The steps taken by `dominate_mop`, the base solution and its lifts."""

    graph: MopGraph
    n: int
    k: int
    bound: int
    steps: List[ReductionStep]
    resolution: BaseResolution
    base_set: Tuple[int, ...]
    lifted: List[Tuple[int, ...]]
    final: DominatingSet
    anomalies: List[Anomaly] = msgspec.field(default_factory=list)


class IrreducibilityReport(msgspec.Struct):
    """Structural clauses that hold in every graph no reduction applies to."""

    n: int
    alpha: Rational
    reducible_by: List[ReductionKind]
    clause_sections_ok: bool
    clause_consecutive_ok: bool
    clause_no_dominating_ok: bool
    findings: List[str]

    @property
    def irreducible(self) -> bool:
        """Return True if none of the four reductions applies."""
        return not self.reducible_by

    @property
    def consistent(self) -> bool:
        """Return True unless an irreducible graph breaks one of the clauses."""
        return not self.irreducible or (
            self.clause_sections_ok
            and self.clause_consecutive_ok
            and self.clause_no_dominating_ok
        )


def _step(  # noqa: PLR0913
    graph: MopGraph,
    kind: ReductionKind,
    anchor: Sequence[int],
    segment: Tuple[int, int],
    *,
    contract: bool,
    rule: LiftRule,
) -> ReductionStep:
    return ReductionStep(
        kind=kind,
        anchor=tuple(anchor),
        first=segment[0],
        last=segment[1],
        contract=contract,
        lift_rule=rule,
        pre_graph=graph,
    )


def _unconditional(name: str, *added: int) -> LiftRule:
    return LiftRule(name, 0, tuple(sorted(added)), tuple(sorted(added)))


def _conditional(
    name: str,
    trigger: int,
    present: Sequence[int],
    absent: Sequence[int],
) -> LiftRule:
    return LiftRule(name, trigger, tuple(sorted(present)), tuple(sorted(absent)))


def _section_dominator(graph: MopGraph, vertices: Sequence[int]) -> Optional[int]:
    """Return the first vertex adjacent to every other vertex of `vertices`."""
    members = set(vertices)
    for v in vertices:
        if members - {v} <= graph.neighbors(v):
            return v
    return None


def _oriented_triangles(graph: MopGraph) -> List[Tuple[int, int, int]]:
    """Return every rotation (r, s, t) of every internal triangle, clockwise."""
    result = []
    for a, b, c in internal_triangles(graph):
        result.extend([(a, b, c), (b, c, a), (c, a, b)])
    return result


def _r1(graph: MopGraph) -> List[ReductionStep]:
    degree_two = set(degree_two_vertices(graph))
    steps = []
    for section in elementary_sections(graph):
        vertices = section.vertices
        if len(vertices) != 6:  # noqa: PLR2004
            continue
        index = next(i for i, v in enumerate(vertices) if v in degree_two)
        # the degree-2 vertex picks the vertex that covers the deleted four
        added = vertices[{1: 0, 2: 3, 3: 2, 4: 5}[index]]
        rule = _unconditional(f"R1:+{added}", added)
        steps.append(
            _step(
                graph,
                ReductionKind.R1,
                (section.r, section.s),
                (vertices[1], vertices[-2]),
                contract=False,
                rule=rule,
            )
        )
    return steps


def _r2(graph: MopGraph) -> List[ReductionStep]:
    steps = []
    for section in sections(graph):
        vertices = section.vertices
        if len(vertices) < 6:  # noqa: PLR2004
            continue
        dominator = _section_dominator(graph, vertices)
        if dominator is None:
            continue
        steps.append(
            _step(
                graph,
                ReductionKind.R2,
                (section.r, section.s),
                (vertices[1], vertices[-2]),
                contract=False,
                rule=_unconditional(f"R2:+{dominator}", dominator),
            )
        )
    return steps


def _r3(graph: MopGraph) -> List[ReductionStep]:
    if graph.n < MIN_CONTRACT_N:
        return []
    degree_two = set(degree_two_vertices(graph))
    steps = []
    for section in elementary_sections(graph):
        vertices = section.vertices
        if len(vertices) != 5 or vertices[2] in degree_two:  # noqa: PLR2004
            continue
        r, s = vertices[0], vertices[-1]
        near = r if vertices[1] in degree_two else s
        rule = _conditional(f"R3:x->{{{r},{s}}}|+{near}", r, (r, s), (near,))
        steps.append(
            _step(
                graph,
                ReductionKind.R3,
                (r, s),
                (r, s),
                contract=True,
                rule=rule,
            )
        )
    return steps


def _r4(graph: MopGraph) -> List[ReductionStep]:
    if graph.n < MIN_CONTRACT_N:
        return []
    steps = []
    for r, s, t in _oriented_triangles(graph):
        if segment_length(graph, r, s) != 2 or segment_length(graph, s, t) != 2:  # noqa: PLR2004
            continue
        rule = _conditional(f"R4:x->{{{r},{t}}}|+{s}", r, (r, t), (s,))
        steps.append(
            _step(
                graph,
                ReductionKind.R4,
                (r, s, t),
                (r, t),
                contract=True,
                rule=rule,
            )
        )
    return steps


def find_applicable(graph: MopGraph) -> List[ReductionStep]:
    """
    Return every applicable R1..R4 candidate.

    Candidates come in priority order R1, R2, R3, R4, each kind scanned
    clockwise by anchor. R3 and R4 need at least seven vertices.
    """
    steps = [*_r1(graph), *_r2(graph), *_r3(graph), *_r4(graph)]
    return sorted(steps, key=lambda step: (RULE_ORDER.index(step.kind), step.anchor))


def _claim1(graph: MopGraph) -> List[ReductionStep]:
    degree_two = set(degree_two_vertices(graph))
    steps = []
    for section in elementary_sections(graph):
        vertices = section.vertices
        if len(vertices) != 5 or vertices[2] not in degree_two:  # noqa: PLR2004
            continue
        r = vertices[0]
        rule = _conditional(
            f"Claim1:{r}->+{vertices[3]}|+{vertices[1]}",
            r,
            (vertices[3],),
            (vertices[1],),
        )
        steps.append(
            _step(
                graph,
                ReductionKind.CLAIM1_DELETE,
                (section.r, section.s),
                (vertices[1], vertices[3]),
                contract=False,
                rule=rule,
            )
        )
    return steps


def _claim2(graph: MopGraph) -> List[ReductionStep]:  # noqa: C901
    steps = []
    for r, s, t in _oriented_triangles(graph):
        left = graph.segment(r, s)
        right = graph.segment(s, t)
        inside = (len(left) - 2, len(right) - 2)
        first_two = graph.degree(left[1]) == 2  # noqa: PLR2004
        last_two = graph.degree(right[-2]) == 2  # noqa: PLR2004
        anchor = (r, s, t)
        if inside == (2, 2):
            if first_two and last_two:
                rule = _unconditional(f"Claim2:x->{{{r},{t}}}", r, t)
                steps.append(
                    _step(
                        graph,
                        ReductionKind.CLAIM2_CONTRACT_BOTH,
                        anchor,
                        (left[1], right[-2]),
                        contract=True,
                        rule=rule,
                    )
                )
            elif first_two and graph.degree(right[1]) == 2:  # noqa: PLR2004
                rule = _conditional(f"Claim2:x->{{{s},{t}}}|+{s}", s, (s, t), (s,))
                steps.append(
                    _step(
                        graph,
                        ReductionKind.CLAIM2_CONTRACT_ONE,
                        anchor,
                        (s, t),
                        contract=True,
                        rule=rule,
                    )
                )
            elif last_two and graph.degree(left[-2]) == 2:  # noqa: PLR2004
                rule = _conditional(f"Claim2:x->{{{r},{s}}}|+{s}", r, (r, s), (s,))
                steps.append(
                    _step(
                        graph,
                        ReductionKind.CLAIM2_CONTRACT_ONE,
                        anchor,
                        (r, s),
                        contract=True,
                        rule=rule,
                    )
                )
        elif inside in {(1, 2), (2, 1)} and first_two and last_two:
            rule = _unconditional(f"Final:x->{{{r},{t}}}", r, t)
            steps.append(
                _step(
                    graph,
                    ReductionKind.FINAL_CONTRACT,
                    anchor,
                    (left[1], right[-2]),
                    contract=True,
                    rule=rule,
                )
            )
    return steps


def claim_candidates(graph: MopGraph) -> List[ReductionStep]:
    """
    Return the in-proof reductions applicable to `graph`.

    Claim1Delete removes the three internal vertices of an elementary section
    whose middle vertex has degree 2. The Claim2 contractions and the final
    contraction act on an internal triangle (r, s, t) whose sections G[r, s]
    and G[s, t] hold one or two internal vertices each.
    """
    steps = [*_claim1(graph), *_claim2(graph)]
    return sorted(steps, key=lambda step: (RULE_ORDER.index(step.kind), step.anchor))


def _relabel(
    graph: MopGraph,
    removed: Sequence[int],
    *,
    contract: bool,
) -> Tuple[MopGraph, Tuple[Tuple[int, ...], ...]]:
    """Remove or contract `removed` and relabel the rest clockwise from 1."""
    segment = set(removed)
    preimages: List[Tuple[int, ...]] = []
    label: Dict[int, int] = {}
    for v in range(1, graph.n + 1):
        if v not in segment:
            preimages.append((v,))
            label[v] = len(preimages)
        elif contract:
            if not any(len(image) > 1 for image in preimages):
                preimages.append(tuple(removed))
            x = next(i for i, image in enumerate(preimages, 1) if len(image) > 1)
            label[v] = x
    n_post = len(preimages)
    edges: Set[Tuple[int, int]] = set()
    for u, v in graph.edges():
        if u in label and v in label and label[u] != label[v]:
            a, b = sorted((label[u], label[v]))
            edges.add((a, b))
    boundary = {
        (min(v, v % n_post + 1), max(v, v % n_post + 1)) for v in range(1, n_post + 1)
    }
    if not boundary <= edges:
        msg = f"reduced graph on {n_post} vertices lost a boundary edge"
        raise ResultNotMaximalOuterplaneError(msg)
    try:
        post = build_mop(n_post, sorted(edges - boundary))
    except InvalidGraphError as exc:
        msg = f"reduced graph is not maximal outerplane: {exc}"
        raise ResultNotMaximalOuterplaneError(msg) from exc
    return post, tuple(preimages)


def apply_step(graph: MopGraph, step: ReductionStep) -> MopGraph:
    """
    Return the graph produced by `step`.

    Raises:
        PreconditionViolatedError: If `step` is not a candidate of `graph`.
        ResultNotMaximalOuterplaneError: If the result is not a MOP.
    """
    return _apply(graph, step)[0]


def _apply(
    graph: MopGraph,
    step: ReductionStep,
) -> Tuple[MopGraph, Tuple[Tuple[int, ...], ...]]:
    candidates = {
        candidate.key
        for candidate in [*find_applicable(graph), *claim_candidates(graph)]
    }
    if step.pre_graph != graph or step.key not in candidates:
        msg = f"{step.kind.value} at {step.anchor} does not apply to this graph"
        raise PreconditionViolatedError(msg)
    return _relabel(graph, graph.segment(step.first, step.last), contract=step.contract)


def realize(step: ReductionStep) -> ReductionStep:
    """Return `step` with its post graph, vertex map and counts filled in."""
    post, preimages = _apply(step.pre_graph, step)
    return msgspec.structs.replace(
        step,
        post_graph=post,
        vertex_map=preimages,
        n_before=step.pre_graph.n,
        k_before=essential_pair_count(step.pre_graph),
        n_after=post.n,
        k_after=essential_pair_count(post),
    )


def relation_problems(step: ReductionStep) -> List[str]:
    """Return the vertex-count, pair-count and budget relations `step` breaks."""
    problems = []
    removed = VERTICES_REMOVED[step.kind]
    delta = step.n_before - step.n_after
    if (removed is None and delta < 4) or (removed is not None and delta != removed):  # noqa: PLR2004
        problems.append(f"{step.kind.value}: removed {delta} vertices")
    k_limit = step.k_before - 1 if step.kind.is_claim else step.k_before
    if step.k_after > k_limit:
        problems.append(
            f"{step.kind.value}: k went {step.k_before} -> {step.k_after}"
        )
    if step.n_after + step.k_after > step.n_before + step.k_before - 4:
        problems.append(f"{step.kind.value}: n + k dropped by less than 4")
    return problems


def lift(post_set: DominatingSet, step: ReductionStep) -> DominatingSet:
    """
    Lift a dominating set of the reduced graph to the graph before `step`.

    Raises:
        PreconditionViolatedError: If `step` has not been applied.
        InvalidInputSetError: If `post_set` does not dominate the reduced graph.
        CertificateError: If the lifted set fails to dominate or grows by more
            than one vertex.
    """
    if step.post_graph is None:
        msg = f"{step.kind.value} at {step.anchor} has not been applied"
        raise PreconditionViolatedError(msg)
    if not is_dominating(SimpleGraph.from_mop(step.post_graph), post_set.vertices):
        msg = f"set {list(post_set.vertices)} does not dominate the reduced graph"
        raise InvalidInputSetError(msg)
    rule = step.lift_rule
    kept = set()
    triggered = False
    for v in post_set.vertices:
        image = step.vertex_map[v - 1]
        triggered = triggered or rule.trigger in image
        if len(image) == 1:
            kept.add(image[0])
    kept.update(rule.present if triggered else rule.absent)
    pre = SimpleGraph.from_mop(step.pre_graph)
    lifted = DominatingSet.of(pre, kept)
    if not is_dominating(pre, lifted.vertices):
        msg = f"{rule.name} lifted {list(post_set.vertices)} to a non-dominating set"
        raise CertificateError(msg)
    if lifted.size > post_set.size + 1:
        msg = f"{rule.name} grew the set from {post_set.size} to {lifted.size}"
        raise CertificateError(msg)
    return lifted


def irreducibility_report(
    graph: MopGraph,
    alpha: fractions.Fraction = fractions.Fraction(1, 4),
) -> IrreducibilityReport:
    """
    Check the structure every graph without an applicable reduction has.

    The clauses are: every maximal elementary section has at most three
    internal vertices, and if exactly three then the middle one has degree 2;
    two sections G[r, s] and G[s, t] closed by the chord {r, t} hold at least
    three internal vertices together; no section with six or more vertices has
    a dominating vertex.

    Raises:
        TooSmallError: If n < 7.
        PreconditionViolatedError: If alpha < 1/4.
    """
    if graph.n < MIN_CONTRACT_N:
        msg = f"irreducibility needs at least {MIN_CONTRACT_N} vertices, got {graph.n}"
        raise TooSmallError(msg)
    if alpha < fractions.Fraction(1, 4):
        msg = f"alpha must be at least 1/4, got {alpha}"
        raise PreconditionViolatedError(msg)
    degree_two = set(degree_two_vertices(graph))
    findings = []
    sections_ok = True
    for section in maximal_elementary_sections(graph):
        internal = section.internal
        if len(internal) > 3 or (  # noqa: PLR2004
            len(internal) == 3 and internal[1] not in degree_two  # noqa: PLR2004
        ):
            sections_ok = False
            findings.append(f"maximal elementary section {section.r}..{section.s}")
    consecutive_ok = True
    for r, s, t in _oriented_triangles(graph):
        inside = segment_length(graph, r, s) + segment_length(graph, s, t) - 2
        if inside < 3:  # noqa: PLR2004
            consecutive_ok = False
            findings.append(f"sections {r}..{s} and {s}..{t} hold {inside} vertices")
    dominating_ok = True
    for section in sections(graph):
        if len(section.vertices) >= 6:  # noqa: PLR2004
            dominator = _section_dominator(graph, section.vertices)
            if dominator is not None:
                dominating_ok = False
                findings.append(
                    f"vertex {dominator} dominates {section.r}..{section.s}"
                )
    reducible_by = sorted(
        {step.kind for step in find_applicable(graph)}, key=RULE_ORDER.index
    )
    return IrreducibilityReport(
        n=graph.n,
        alpha=Rational.from_fraction(alpha),
        reducible_by=reducible_by,
        clause_sections_ok=sections_ok,
        clause_consecutive_ok=consecutive_ok,
        clause_no_dominating_ok=dominating_ok,
        findings=findings,
    )


def _first_within_budget(
    candidates: Sequence[ReductionStep],
    anomalies: List[Anomaly],
) -> Optional[ReductionStep]:
    """Return the first candidate whose result meets its relations."""
    for candidate in candidates:
        applied = realize(candidate)
        problems = relation_problems(applied)
        if not problems:
            return applied
        for problem in problems:
            logger.warning("skipping candidate: %s", problem)
            anomalies.append(Anomaly("relation", applied.n_before, problem))
    return None


def _next_step(
    graph: MopGraph,
    anomalies: List[Anomaly],
) -> Tuple[Optional[ReductionStep], Optional[BaseResolution]]:
    claims = claim_candidates(graph)
    first_claims = [c for c in claims if c.kind is ReductionKind.CLAIM1_DELETE]
    step = _first_within_budget([*find_applicable(graph), *first_claims], anomalies)
    if step is not None:
        return step, None
    if is_striped(graph):
        return None, BaseResolution.STRIPED
    later_claims = [c for c in claims if c.kind is not ReductionKind.CLAIM1_DELETE]
    step = _first_within_budget(later_claims, anomalies)
    if step is not None:
        return step, None
    message = "no reduction or claim case applies"
    logger.warning("n=%d: %s, solving exactly", graph.n, message)
    anomalies.append(Anomaly("fallback", graph.n, message))
    return None, BaseResolution.FALLBACK


def _solve_base(
    graph: MopGraph,
    resolution: BaseResolution,
    anomalies: List[Anomaly],
) -> DominatingSet:
    simple = SimpleGraph.from_mop(graph)
    if resolution is BaseResolution.DOMINATING_VERTEX:
        vertex = dominating_vertex(simple)
        return DominatingSet.of(simple, [vertex] if vertex is not None else [])
    solution = gamma_mop_dp(graph)
    if resolution is BaseResolution.STRIPED:
        t = len(degree_two_vertices(graph))
        if solution.size > thm11_bound(graph.n, t):
            message = f"striped graph has gamma {solution.size} > (n + t) / 4"
            logger.warning("n=%d: %s", graph.n, message)
            anomalies.append(Anomaly("striped", graph.n, message))
    return solution


def dominate_mop(graph: MopGraph) -> ReductionTrace:
    """
    Build a dominating set of size at most ceil((n + k) / 4) by reduction.

    Per level: graphs with at most six vertices or a dominating vertex are
    solved directly; otherwise the first R1..R4 or Claim1Delete candidate
    within budget is applied; a striped graph is solved exactly; otherwise the
    Claim2 and final contractions are tried; if nothing applies the graph is
    solved exactly and an anomaly is recorded. A candidate is within budget if
    its result meets the kind's relations and n' + k' <= n + k - 4.

    Raises:
        BoundViolatedError: If the final set exceeds ceil((n + k) / 4).
    """
    k = essential_pair_count(graph)
    bound = thm12_bound(graph.n, k)
    steps: List[ReductionStep] = []
    anomalies: List[Anomaly] = []
    current = graph
    while True:
        resolution: Optional[BaseResolution] = None
        if current.n <= SMALL_BASE:
            resolution = BaseResolution.SMALL
        elif dominating_vertex(SimpleGraph.from_mop(current)) is not None:
            resolution = BaseResolution.DOMINATING_VERTEX
        else:
            step, resolution = _next_step(current, anomalies)
            if step is not None and step.post_graph is not None:
                logger.debug(
                    "%s at %s: n %d -> %d, k %d -> %d",
                    step.kind.value,
                    step.anchor,
                    step.n_before,
                    step.n_after,
                    step.k_before,
                    step.k_after,
                )
                steps.append(step)
                current = step.post_graph
                continue
        break
    assert resolution is not None  # noqa: S101
    base = _solve_base(current, resolution, anomalies)
    solution = base
    lifted = []
    for step in reversed(steps):
        solution = lift(solution, step)
        lifted.append(solution.vertices)
    lifted.reverse()
    trace = ReductionTrace(
        graph=graph,
        n=graph.n,
        k=k,
        bound=bound,
        steps=steps,
        resolution=resolution,
        base_set=base.vertices,
        lifted=lifted,
        final=solution,
        anomalies=anomalies,
    )
    if solution.size > bound:
        msg = (
            f"constructed {solution.size} vertices, "
            f"bound is {bound} (n={graph.n}, k={k})"
        )
        logger.error("%s: %s", msg, msgspec.json.encode(trace).decode())
        raise BoundViolatedError(msg, payload=trace)
    return trace


def verify_trace(trace: ReductionTrace) -> List[str]:
    """
    Replay a trace independently and return the problems found.

    Every post graph is recomputed from its pre graph, every relation is
    rechecked and every lift is redone from the base set and compared with
    the recorded sets. An empty list means the trace is sound.
    """
    problems = []
    current = trace.graph
    if trace.n != current.n or trace.k != essential_pair_count(current):
        problems.append("recorded n or k does not match the graph")
    if trace.bound != thm12_bound(current.n, essential_pair_count(current)):
        problems.append("recorded bound does not match the graph")
    for index, step in enumerate(trace.steps):
        if step.pre_graph != current:
            problems.append(f"step {index}: pre graph does not continue the chain")
        try:
            replayed = realize(step)
        except OuterdomError as exc:
            problems.append(f"step {index}: {exc}")
            return problems
        if replayed != step:
            problems.append(f"step {index}: recorded result differs from replay")
        problems.extend(f"step {index}: {p}" for p in relation_problems(replayed))
        assert replayed.post_graph is not None  # noqa: S101
        current = replayed.post_graph
    simple = SimpleGraph.from_mop(current)
    if not is_dominating(simple, trace.base_set):
        problems.append("base set does not dominate the base graph")
        return problems
    if len(trace.lifted) != len(trace.steps):
        problems.append("number of lifted sets does not match number of steps")
        return problems
    solution = DominatingSet.of(simple, trace.base_set)
    for index in reversed(range(len(trace.steps))):
        try:
            solution = lift(solution, trace.steps[index])
        except OuterdomError as exc:
            problems.append(f"lift {index}: {exc}")
            return problems
        if solution.vertices != tuple(trace.lifted[index]):
            problems.append(f"lift {index}: recorded set differs from replay")
    if solution.vertices != trace.final.vertices or solution.size != trace.final.size:
        problems.append("final set differs from replay")
    if not is_dominating(SimpleGraph.from_mop(trace.graph), trace.final.vertices):
        problems.append("final set does not dominate the graph")
    if trace.final.size > trace.bound:
        problems.append(f"final set has {trace.final.size} > {trace.bound} vertices")
    return problems

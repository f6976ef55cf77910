import fractions
from typing import Dict, List, Tuple

import msgspec
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from outerdom.bounds import essential_pair_count, thm12_bound
from outerdom.domination import (
    DominatingSet,
    SimpleGraph,
    is_dominating,
    minimum_dominating_sets,
)
from outerdom.exceptions import (
    InvalidInputSetError,
    PreconditionViolatedError,
    TooSmallError,
)
from outerdom.generators import enumerate_mops, random_mop
from outerdom.mop import MopGraph, build_mop
from outerdom.reductions import (
    ReductionStep,
    ReductionTrace,
    apply_step,
    claim_candidates,
    dominate_mop,
    find_applicable,
    irreducibility_report,
    lift,
    realize,
    relation_problems,
    verify_trace,
)
from outerdom.value_objects import BaseResolution, ReductionKind


def _only(steps: List[ReductionStep], kind: ReductionKind) -> ReductionStep:
    matching = [step for step in steps if step.kind is kind]
    assert len(matching) == 1
    return matching[0]


def _lift(step: ReductionStep, vertices: List[int]) -> Tuple[int, ...]:
    assert step.post_graph is not None
    post = SimpleGraph.from_mop(step.post_graph)
    return lift(DominatingSet.of(post, vertices), step).vertices


@pytest.fixture(name="r3_graph")
def r3_graph_fix() -> MopGraph:
    """Return a graph whose section 1..5 is fanned from 1."""
    return build_mop(7, [(1, 3), (1, 4), (1, 5), (5, 7)])


@pytest.fixture(name="r4_graph")
def r4_graph_fix() -> MopGraph:
    """Return a graph with the internal triangle 1, 3, 5."""
    return build_mop(7, [(1, 3), (3, 5), (1, 5), (5, 7)])


@pytest.fixture(name="claim1_graph")
def claim1_graph_fix() -> MopGraph:
    """Return a graph whose section 1..5 has its degree-2 vertex in the middle."""
    return build_mop(7, [(2, 4), (1, 4), (1, 5), (5, 7)])


@pytest.fixture(name="claim2_graph")
def claim2_graph_fix() -> MopGraph:
    """Return a graph with the internal triangle 1, 4, 7 and two ears inside."""
    return build_mop(8, [(1, 3), (1, 4), (4, 7), (5, 7), (1, 7)])


@pytest.fixture(name="final_graph")
def final_graph_fix() -> MopGraph:
    """Return a graph with the internal triangle 1, 3, 6."""
    return build_mop(7, [(1, 3), (3, 6), (4, 6), (1, 6)])


@pytest.fixture(name="zigzag")
def zigzag_fix() -> MopGraph:
    """Return a striped 8-vertex graph without a dominating vertex."""
    return build_mop(8, [(2, 8), (2, 7), (3, 7), (3, 6), (4, 6)])


@pytest.fixture(name="without_reductions")
def without_reductions_fix(monkeypatch: pytest.MonkeyPatch) -> None:
    """Make the engine find no reduction or claim case."""
    monkeypatch.setattr("outerdom.reductions.find_applicable", lambda graph: [])
    monkeypatch.setattr("outerdom.reductions.claim_candidates", lambda graph: [])


def test_find_applicable_fan(fan7: MopGraph) -> None:
    """Verify the 7-vertex fan offers R1 and R2 in priority order."""
    steps = find_applicable(fan7)
    kinds = [step.kind for step in steps]

    assert kinds == [
        ReductionKind.R1,
        ReductionKind.R1,
        ReductionKind.R2,
        ReductionKind.R2,
    ]
    assert steps[0].anchor == (1, 6)
    assert (steps[0].first, steps[0].last) == (2, 5)
    assert steps[0].lift_rule.present == (1,)
    assert steps[2].lift_rule.present == (1,)


def test_find_applicable_small(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify graphs below seven vertices offer no contraction."""
    assert find_applicable(hexagon) == []
    assert all(
        step.kind not in {ReductionKind.R3, ReductionKind.R4}
        for step in find_applicable(fan6)
    )


def test_r1_step(fan7: MopGraph) -> None:
    """Verify R1 deletes four vertices and lifts by adding the section's hub."""
    step = realize(find_applicable(fan7)[0])

    assert step.post_graph == build_mop(3, [])
    assert step.vertex_map == ((1,), (6,), (7,))
    assert (step.n_before, step.n_after) == (7, 3)
    assert (step.k_before, step.k_after) == (1, 0)
    assert relation_problems(step) == []
    assert _lift(step, [2]) == (1, 6)
    assert apply_step(fan7, find_applicable(fan7)[0]) == step.post_graph


def test_r3_step(r3_graph: MopGraph) -> None:
    """Verify R3 contracts the five-vertex section and lifts by cases."""
    step = realize(_only(find_applicable(r3_graph), ReductionKind.R3))

    assert step.anchor == (1, 5)
    assert step.contract
    assert step.n_after == 3
    assert relation_problems(step) == []
    assert _lift(step, [1]) == (1, 5)
    assert _lift(step, [2]) == (1, 6)


def test_r4_step(r4_graph: MopGraph) -> None:
    """Verify R4 contracts G[r, t] and lifts by cases."""
    step = realize(_only(find_applicable(r4_graph), ReductionKind.R4))

    assert step.anchor == (1, 3, 5)
    assert step.vertex_map == ((1, 2, 3, 4, 5), (6,), (7,))
    assert step.n_before - step.n_after == 4
    assert relation_problems(step) == []
    assert _lift(step, [1]) == (1, 5)
    assert _lift(step, [2]) == (3, 6)


def test_claim1_step(claim1_graph: MopGraph) -> None:
    """Verify Claim1Delete removes three vertices and lifts by cases."""
    candidates = claim_candidates(claim1_graph)
    anchors = [c.anchor for c in candidates if c.kind is ReductionKind.CLAIM1_DELETE]
    step = realize(next(c for c in candidates if c.anchor == (1, 5)))

    assert anchors == [(1, 5), (4, 1)]
    assert step.kind is ReductionKind.CLAIM1_DELETE
    assert not step.contract
    assert step.post_graph == build_mop(4, [(2, 4)])
    assert _lift(step, [2]) == (2, 5)
    assert _lift(step, [4]) == (2, 7)
    assert _lift(step, [1, 3]) == (1, 4, 6)


def test_claim2_contract_both(claim2_graph: MopGraph) -> None:
    """Verify the double ear contraction lifts to the triangle's outer corners."""
    candidates = claim_candidates(claim2_graph)
    step = realize(_only(candidates, ReductionKind.CLAIM2_CONTRACT_BOTH))

    assert step.anchor == (1, 4, 7)
    assert (step.first, step.last) == (2, 6)
    assert (step.n_after, step.k_before, step.k_after) == (4, 1, 0)
    assert relation_problems(step) == []
    assert _lift(step, [1]) == (1, 7)


@pytest.mark.parametrize(
    ("chords", "segment", "lifted"),
    [
        (
            [(1, 3), (1, 4), (4, 6), (4, 7), (1, 7), (7, 9)],
            (4, 7),
            {(1, 4): (1, 4, 7), (1, 5): (1, 4, 8)},
        ),
        (
            [(1, 4), (1, 7), (2, 4), (4, 7), (5, 7), (7, 9)],
            (1, 4),
            {(4,): (4, 7), (1, 4): (1, 4, 7)},
        ),
    ],
)
def test_claim2_contract_one(
    chords: List[Tuple[int, int]],
    segment: Tuple[int, int],
    lifted: Dict[Tuple[int, ...], Tuple[int, ...]],
) -> None:
    """Verify the single ear contraction on either side of the triangle."""
    graph = build_mop(9, chords)
    step = realize(next(c for c in claim_candidates(graph) if c.anchor == (1, 4, 7)))

    assert step.kind is ReductionKind.CLAIM2_CONTRACT_ONE
    assert (step.first, step.last) == segment
    assert (step.n_before, step.n_after) == (9, 6)
    assert relation_problems(step) == []
    for post_set, expected in lifted.items():
        assert _lift(step, list(post_set)) == expected
    assert step.post_graph is not None
    bound = thm12_bound(9, essential_pair_count(graph))
    for solution in minimum_dominating_sets(SimpleGraph.from_mop(step.post_graph)):
        pre = lift(solution, step)
        assert pre.size <= bound
        assert is_dominating(SimpleGraph.from_mop(graph), pre.vertices)


def test_final_contract(final_graph: MopGraph) -> None:
    """Verify the final contraction removes three vertices."""
    step = realize(_only(claim_candidates(final_graph), ReductionKind.FINAL_CONTRACT))

    assert step.anchor == (1, 3, 6)
    assert (step.n_before, step.n_after) == (7, 4)
    assert relation_problems(step) == []
    assert _lift(step, [1]) == (1, 6)


def test_apply_step_checks_preconditions(fan7: MopGraph, hexagon: MopGraph) -> None:
    """Verify a step is refused by a graph it was not found in."""
    step = find_applicable(fan7)[0]

    with pytest.raises(PreconditionViolatedError):
        apply_step(hexagon, step)


def test_lift_requires_applied_step(fan7: MopGraph) -> None:
    """Verify lifting needs a realized step."""
    step = find_applicable(fan7)[0]
    post = SimpleGraph.from_mop(build_mop(3, []))

    with pytest.raises(PreconditionViolatedError):
        lift(DominatingSet.of(post, [1]), step)


def test_lift_rejects_non_dominating(r4_graph: MopGraph) -> None:
    """Verify a set that does not dominate the reduced graph is refused."""
    step = realize(_only(find_applicable(r4_graph), ReductionKind.R4))

    with pytest.raises(InvalidInputSetError):
        lift(DominatingSet((), 0, ""), step)


def test_irreducibility_report(fan7: MopGraph, hexagon: MopGraph) -> None:
    """Verify reducible graphs are reported with their reductions."""
    report = irreducibility_report(fan7)

    assert report.reducible_by == [ReductionKind.R1, ReductionKind.R2]
    assert not report.irreducible
    assert report.consistent
    with pytest.raises(TooSmallError):
        irreducibility_report(hexagon)
    with pytest.raises(PreconditionViolatedError):
        irreducibility_report(fan7, alpha=fractions.Fraction(1, 5))


@pytest.mark.parametrize("n", range(7, 11))
def test_irreducible_graphs_have_the_clauses(n: int) -> None:
    """Verify every graph without a reduction has the expected structure."""
    for graph in enumerate_mops(n):
        assert irreducibility_report(graph).consistent


def test_dominate_small(hexagon: MopGraph, fan7: MopGraph) -> None:
    """Verify small graphs and universal vertices are solved directly."""
    trace = dominate_mop(hexagon)

    assert trace.resolution is BaseResolution.SMALL
    assert trace.steps == []
    assert trace.final.size == 2 == trace.bound

    fan_trace = dominate_mop(fan7)
    assert fan_trace.resolution is BaseResolution.DOMINATING_VERTEX
    assert fan_trace.final.vertices == (1,)


@pytest.mark.usefixtures("without_reductions")
def test_dominate_striped_base(zigzag: MopGraph) -> None:
    """Verify a striped graph with no step left is solved exactly."""
    trace = dominate_mop(zigzag)

    assert trace.resolution is BaseResolution.STRIPED
    assert trace.steps == []
    assert trace.final.size == 2
    assert trace.anomalies == []
    assert verify_trace(trace) == []


@pytest.mark.usefixtures("without_reductions")
def test_dominate_fallback(fig2: MopGraph) -> None:
    """Verify an unstriped graph with no step left is solved exactly and flagged."""
    trace = dominate_mop(fig2)

    assert trace.resolution is BaseResolution.FALLBACK
    assert [anomaly.stage for anomaly in trace.anomalies] == ["fallback"]
    assert trace.final.size == 4 == trace.bound


def test_dominate_figure2(fig2: MopGraph) -> None:
    """Verify the engine meets the ceiling bound on the 14-vertex example."""
    trace = dominate_mop(fig2)

    assert trace.bound == 4
    assert trace.final.size == 4
    assert is_dominating(SimpleGraph.from_mop(fig2), trace.final.vertices)
    assert len(trace.lifted) == len(trace.steps)
    assert verify_trace(trace) == []


def test_trace_survives_json(fig2: MopGraph) -> None:
    """Verify a decoded trace replays cleanly."""
    trace = dominate_mop(fig2)
    decoded = msgspec.json.decode(msgspec.json.encode(trace), type=ReductionTrace)

    assert verify_trace(decoded) == []


def test_verify_trace_flags_tampering(fig2: MopGraph) -> None:
    """Verify a replaced final set is reported."""
    trace = dominate_mop(fig2)
    tampered = msgspec.structs.replace(
        trace, final=DominatingSet((1,), 1, trace.final.graph_id)
    )

    assert verify_trace(tampered) != []


@settings(deadline=None, max_examples=60)
@given(n=st.integers(min_value=7, max_value=40), seed=st.integers(0, 10_000))
def test_dominate_random(n: int, seed: int) -> None:
    """Verify the engine's set dominates within ceil((n + k) / 4)."""
    graph = random_mop(n, seed)
    trace = dominate_mop(graph)

    assert trace.final.size <= thm12_bound(n, essential_pair_count(graph))
    assert is_dominating(SimpleGraph.from_mop(graph), trace.final.vertices)
    assert verify_trace(trace) == []
    for step in trace.steps:
        assert step.n_before - step.n_after >= 3
        assert relation_problems(step) == []


@pytest.mark.parametrize("n", range(4, 11))
def test_dominate_exhaustive(n: int) -> None:
    """Verify the engine on every MOP of a given size."""
    for graph in enumerate_mops(n):
        trace = dominate_mop(graph)

        assert trace.final.size <= trace.bound
        assert is_dominating(SimpleGraph.from_mop(graph), trace.final.vertices)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(11, 14))
def test_dominate_exhaustive_large(n: int) -> None:
    """Verify the engine on every MOP up to 13 vertices."""
    for graph in enumerate_mops(n):
        assert dominate_mop(graph).final.size <= thm12_bound(
            n, essential_pair_count(graph)
        )

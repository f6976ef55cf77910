import math
from typing import Tuple

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from outerdom.domination import (
    DominatingSet,
    SimpleGraph,
    dominating_vertex,
    gamma_cyclic_band,
    gamma_exact_bb,
    gamma_mop_dp,
    greedy_dominating_set,
    is_dominating,
    minimum_dominating_sets,
)
from outerdom.exceptions import BadIndexError, NotBandedError, TooLargeError
from outerdom.generators import enumerate_mops, random_ht, random_mop
from outerdom.hamiltonian import HamTriangulation, full_graph, habo_graph
from outerdom.mop import MopGraph


def _cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])


def test_from_edges_drops_duplicates() -> None:
    """Verify edges are canonicalized and deduplicated."""
    graph = SimpleGraph.from_edges(3, [(2, 1), (1, 2), (3, 2)])

    assert graph.edges == ((1, 2), (2, 3))
    assert graph.neighbors(2) == (1, 3)


@pytest.mark.parametrize("edge", [(1, 1), (0, 2), (2, 4)])
def test_from_edges_rejects(edge: Tuple[int, int]) -> None:
    """Verify loops and out-of-range positions raise BadIndexError."""
    with pytest.raises(BadIndexError):
        SimpleGraph.from_edges(3, [edge])


def test_graph_id_tracks_edges(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify equal graphs share a digest and different graphs do not."""
    simple = SimpleGraph.from_mop(hexagon)

    assert simple.graph_id == SimpleGraph.from_mop(hexagon).graph_id
    assert simple.graph_id != SimpleGraph.from_mop(fan6).graph_id
    assert DominatingSet.of(simple, [4, 1, 1]) == DominatingSet(
        (1, 4), 2, simple.graph_id
    )


def test_is_dominating(
    triangle: MopGraph,
    hexagon: MopGraph,
    octa: HamTriangulation,
) -> None:
    """Verify closed-neighbourhood coverage."""
    assert is_dominating(SimpleGraph.from_mop(triangle), [1])
    assert not is_dominating(SimpleGraph.from_mop(hexagon), [1])
    assert is_dominating(full_graph(octa), [1, 4])
    with pytest.raises(BadIndexError):
        is_dominating(SimpleGraph.from_mop(triangle), [4])


def test_gamma_exact_bb(octa: HamTriangulation, seven: HamTriangulation) -> None:
    """Verify branch and bound on the named triangulations."""
    assert gamma_exact_bb(full_graph(octa)).size == 2
    assert gamma_exact_bb(full_graph(seven)).size == 2
    assert gamma_exact_bb(SimpleGraph(1)).size == 1
    assert gamma_exact_bb(SimpleGraph(0)).size == 0


def test_gamma_exact_bb_limit(octa: HamTriangulation) -> None:
    """Verify the vertex cap."""
    with pytest.raises(TooLargeError):
        gamma_exact_bb(full_graph(octa), limit=5)


@pytest.mark.parametrize("n", [9, 10, 11, 12, 13, 14, 15])
def test_gamma_exact_bb_cycle(n: int) -> None:
    """Verify the domination number of a cycle is ceil(n / 3)."""
    assert gamma_exact_bb(_cycle(n)).size == math.ceil(n / 3)


def test_gamma_mop_dp_named(triangle: MopGraph, fig2: MopGraph) -> None:
    """Verify the DP on the smallest and the 14-vertex example."""
    assert gamma_mop_dp(triangle).size == 1
    solution = gamma_mop_dp(fig2)

    assert solution.size == 4
    assert is_dominating(SimpleGraph.from_mop(fig2), solution.vertices)


@pytest.mark.parametrize("n", range(3, 10))
def test_gamma_mop_dp_matches_exact(n: int) -> None:
    """Verify the DP against branch and bound on every MOP of a given size."""
    for graph in enumerate_mops(n):
        simple = SimpleGraph.from_mop(graph)
        solution = gamma_mop_dp(graph)

        assert solution.size == gamma_exact_bb(simple).size
        assert is_dominating(simple, solution.vertices)
        assert solution.graph_id == simple.graph_id


@settings(deadline=None, max_examples=30)
@given(n=st.integers(min_value=10, max_value=24), seed=st.integers(0, 10_000))
def test_gamma_mop_dp_random(n: int, seed: int) -> None:
    """Verify the DP against branch and bound on random MOPs."""
    graph = random_mop(n, seed)
    simple = SimpleGraph.from_mop(graph)

    assert gamma_mop_dp(graph).size == gamma_exact_bb(simple).size


def test_dominating_vertex(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify the universal vertex, if any."""
    star = SimpleGraph.from_edges(5, [(3, v) for v in (1, 2, 4, 5)])

    assert dominating_vertex(SimpleGraph.from_mop(fan6)) == 1
    assert dominating_vertex(SimpleGraph.from_mop(hexagon)) is None
    assert dominating_vertex(star) == 3


def test_greedy_dominates(fig2: MopGraph) -> None:
    """Verify the greedy upper bound is a dominating set."""
    simple = SimpleGraph.from_mop(fig2)

    assert is_dominating(simple, greedy_dominating_set(simple).vertices)


def test_minimum_dominating_sets(hexagon: MopGraph) -> None:
    """Verify every minimum set is listed once and dominates."""
    simple = SimpleGraph.from_mop(hexagon)
    sets = list(minimum_dominating_sets(simple))

    assert (1, 4) in [found.vertices for found in sets]
    assert len({found.vertices for found in sets}) == len(sets)
    assert all(found.size == 2 for found in sets)
    assert all(is_dominating(simple, found.vertices) for found in sets)


@pytest.mark.parametrize("n", [3, 5, 8, 9, 10, 13, 20, 31])
def test_gamma_cyclic_band_cycle(n: int) -> None:
    """Verify the band DP on cycles."""
    solution = gamma_cyclic_band(_cycle(n), width=2)

    assert solution.size == math.ceil(n / 3)
    assert is_dominating(_cycle(n), solution.vertices)


@settings(deadline=None, max_examples=30)
@given(n=st.integers(min_value=6, max_value=20), seed=st.integers(0, 10_000))
def test_gamma_cyclic_band_matches_exact(n: int, seed: int) -> None:
    """Verify the band DP against branch and bound on K graphs."""
    graph = habo_graph(random_ht(n, seed)).graph
    solution = gamma_cyclic_band(graph, width=2)

    assert solution.size == gamma_exact_bb(graph).size
    assert is_dominating(graph, solution.vertices)


def test_gamma_cyclic_band_rejects_long_edges() -> None:
    """Verify an edge beyond the band width raises NotBandedError."""
    graph = SimpleGraph.from_edges(12, [*_cycle(12).edges, (1, 6)])

    with pytest.raises(NotBandedError):
        gamma_cyclic_band(graph, width=2)

from typing import List, Tuple, Type

import pytest
from hypothesis import given
from hypothesis import strategies as st
from outerdom.exceptions import (
    BadIndexError,
    CountMismatchError,
    CrossingChordsError,
    DuplicateOrBoundaryChordError,
    InvalidGraphError,
    NotAChordError,
)
from outerdom.generators import random_mop
from outerdom.mop import (
    MopGraph,
    build_mop,
    chords_cross,
    degree_two_vertices,
    elementary_sections,
    inner_dual,
    internal_triangles,
    is_striped,
    maximal_elementary_sections,
    section_of,
)
from outerdom.value_objects import Section


def test_build_triangle(triangle: MopGraph) -> None:
    """Verify the triangle is a valid MOP without chords."""
    assert triangle.n == 3
    assert triangle.chords == ()
    assert len(triangle.edges()) == 3


def test_build_canonicalizes_chords() -> None:
    """Verify chords are stored as sorted pairs in sorted order."""
    graph = build_mop(6, [(5, 1), (3, 5), (3, 1)])

    assert graph.chords == ((1, 3), (1, 5), (3, 5))


@pytest.mark.parametrize(
    ("n", "chords", "error"),
    [
        (6, [(1, 3), (2, 5), (3, 5)], CrossingChordsError),
        (6, [(1, 3)], CountMismatchError),
        (6, [(1, 3), (3, 1), (1, 5)], DuplicateOrBoundaryChordError),
        (5, [(1, 2), (1, 3)], DuplicateOrBoundaryChordError),
        (5, [(1, 3), (1, 6)], BadIndexError),
        (5, [(1, 3, 4), (1, 4)], BadIndexError),
        (2, [], BadIndexError),
    ],
)
def test_build_rejects(
    n: int,
    chords: List[Tuple[int, ...]],
    error: Type[InvalidGraphError],
) -> None:
    """Verify invalid chord lists raise the matching error."""
    with pytest.raises(error):
        build_mop(n, chords)


def test_chords_cross() -> None:
    """Verify crossing is strict interleaving."""
    assert chords_cross((1, 3), (2, 5))
    assert not chords_cross((1, 3), (3, 5))
    assert not chords_cross((1, 5), (2, 4))


def test_boundary_walk(fan6: MopGraph) -> None:
    """Verify successor, predecessor and segments wrap around."""
    assert fan6.successor(6) == 1
    assert fan6.predecessor(1) == 6
    assert fan6.segment(5, 2) == (5, 6, 1, 2)
    assert fan6.is_boundary_edge(6, 1)
    assert fan6.has_chord(4, 1)


def test_degree_two_vertices(
    triangle: MopGraph,
    hexagon: MopGraph,
    fan6: MopGraph,
) -> None:
    """Verify degree-2 vertices of the small examples."""
    assert degree_two_vertices(triangle) == [1, 2, 3]
    assert degree_two_vertices(hexagon) == [2, 4, 6]
    assert degree_two_vertices(fan6) == [2, 6]


def test_section_of(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify sections hold the clockwise interior of their chord."""
    assert section_of(hexagon, 1, 3).internal == (2,)
    assert section_of(fan6, 1, 4).internal == (2, 3)
    with pytest.raises(NotAChordError):
        section_of(hexagon, 1, 2)


def test_elementary_sections(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify elementary and maximal elementary sections."""
    expected = [Section(1, 3, (2,)), Section(3, 5, (4,)), Section(5, 1, (6,))]

    assert Section(1, 4, (2, 3)) in elementary_sections(fan6)
    assert elementary_sections(hexagon) == expected
    assert maximal_elementary_sections(hexagon) == expected


def test_internal_triangles(hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify the hexagon has an internal triangle and the fan is striped."""
    assert internal_triangles(hexagon) == [(1, 3, 5)]
    assert not is_striped(hexagon)
    assert internal_triangles(fan6) == []
    assert is_striped(fan6)


def test_inner_dual(triangle: MopGraph, hexagon: MopGraph, fan6: MopGraph) -> None:
    """Verify the inner dual of the small examples."""
    assert inner_dual(triangle).nodes == ((1, 2, 3),)
    assert inner_dual(triangle).edges == ()
    assert len(inner_dual(build_mop(4, [(1, 3)])).edges) == 1

    star = inner_dual(hexagon)
    assert len(star.nodes) == 4
    assert len(star.edges) == 3
    assert star.is_tree()
    assert not star.is_path()
    assert inner_dual(fan6).is_path()


@given(n=st.integers(min_value=3, max_value=40), seed=st.integers(0, 10_000))
def test_random_mop_structure(n: int, seed: int) -> None:
    """Verify edge count, dual tree and degree-2 facts on random MOPs."""
    graph = random_mop(n, seed)
    dual = inner_dual(graph)

    assert build_mop(graph.n, graph.chords) == graph
    assert len(graph.edges()) == 2 * n - 3
    assert len(dual.nodes) == n - 2
    assert dual.is_tree()
    assert dual.is_path() == is_striped(graph)
    if n >= 4:
        assert len(degree_two_vertices(graph)) >= 2
    if n >= 4 and is_striped(graph):
        assert len(degree_two_vertices(graph)) == 2

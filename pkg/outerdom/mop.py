"""Maximal outerplane graphs on boundary positions 1..n."""

import functools
import itertools
import logging
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import msgspec
import networkx as nx

from outerdom.exceptions import (
    BadIndexError,
    CountMismatchError,
    CrossingChordsError,
    DuplicateOrBoundaryChordError,
    NotAChordError,
)
from outerdom.value_objects import Pair, Section

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]


class MopGraph(msgspec.Struct, frozen=True):
    """
    A maximal outerplane graph.

    The boundary Hamilton cycle visits positions 1..n clockwise; `chords` holds
    the n - 3 noncrossing diagonals as sorted `(min, max)` pairs. Use
    `build_mop` to get a validated instance.
    """

    n: int
    chords: Tuple[Pair, ...] = ()

    def successor(self, v: int) -> int:
        """Return the clockwise neighbour of `v` on the boundary."""
        return v % self.n + 1

    def predecessor(self, v: int) -> int:
        """Return the counter-clockwise neighbour of `v` on the boundary."""
        return (v - 2) % self.n + 1

    def is_boundary_edge(self, u: int, v: int) -> bool:
        """Return True if `{u, v}` is an edge of the boundary cycle."""
        return v in (self.successor(u), self.predecessor(u)) and u != v

    def has_chord(self, u: int, v: int) -> bool:
        """Return True if `{u, v}` is a chord."""
        return canonical_pair(u, v) in chord_set(self)

    def is_edge(self, u: int, v: int) -> bool:
        """Return True if `{u, v}` is an edge."""
        return v in adjacency(self)[u]

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Return the neighbours of `v`."""
        return adjacency(self)[v]

    def degree(self, v: int) -> int:
        """Return the degree of `v`."""
        return len(adjacency(self)[v])

    def edges(self) -> List[Pair]:
        """Return all edges as sorted pairs."""
        boundary = {canonical_pair(v, self.successor(v)) for v in range(1, self.n + 1)}
        return sorted(boundary | set(self.chords))

    def segment(self, r: int, s: int) -> Tuple[int, ...]:
        """Return the positions of C[r, s] in clockwise order."""
        return tuple(
            (r - 1 + offset) % self.n + 1
            for offset in range(segment_length(self, r, s) + 1)
        )


def canonical_pair(u: int, v: int) -> Pair:
    """Return `(min, max)`."""
    return (u, v) if u < v else (v, u)


@functools.lru_cache(maxsize=8192)
def chord_set(graph: MopGraph) -> FrozenSet[Pair]:
    """Return the chords as a set."""
    return frozenset(graph.chords)


@functools.lru_cache(maxsize=8192)
def adjacency(graph: MopGraph) -> Tuple[FrozenSet[int], ...]:
    """Return neighbour sets indexed by position (index 0 unused)."""
    neighbors: List[Set[int]] = [set() for _ in range(graph.n + 1)]
    for u, v in graph.edges():
        neighbors[u].add(v)
        neighbors[v].add(u)
    return tuple(frozenset(vertices) for vertices in neighbors)


def chords_cross(first: Pair, second: Pair) -> bool:
    """Return True if the two chords cross."""
    a, b = first
    inside = [a < v < b for v in second if v not in first]
    return len(inside) == 2 and inside[0] != inside[1]  # noqa: PLR2004


def build_mop(n: int, chords: Iterable[Sequence[int]]) -> MopGraph:
    """
    Validate raw input and return a MopGraph.

    Args:
        n: The number of boundary positions.
        chords: Unordered position pairs.

    Returns:
        The graph with chords canonicalized and sorted.

    Raises:
        BadIndexError: If n < 3, a pair is malformed or a position is out of range.
        DuplicateOrBoundaryChordError: If a chord repeats or is a boundary edge.
        CountMismatchError: If there are not exactly n - 3 chords.
        CrossingChordsError: If two chords cross.
    """
    if n < 3:  # noqa: PLR2004
        msg = f"a maximal outerplane graph needs at least 3 vertices, got {n}"
        raise BadIndexError(msg)
    polygon = MopGraph(n)
    seen: Set[Pair] = set()
    for raw in chords:
        if len(raw) != 2:  # noqa: PLR2004
            msg = f"chord must be a pair, got {list(raw)}"
            raise BadIndexError(msg)
        u, v = int(raw[0]), int(raw[1])
        if not (1 <= u <= n and 1 <= v <= n):
            msg = f"chord {{{u},{v}}} has a position outside 1..{n}"
            raise BadIndexError(msg)
        pair = canonical_pair(u, v)
        if u == v or polygon.is_boundary_edge(u, v):
            msg = f"chord {{{u},{v}}} is a loop or a boundary edge"
            raise DuplicateOrBoundaryChordError(msg)
        if pair in seen:
            msg = f"chord {{{u},{v}}} appears twice"
            raise DuplicateOrBoundaryChordError(msg)
        seen.add(pair)
    if len(seen) != n - 3:
        msg = f"expected {n - 3} chords for n={n}, got {len(seen)}"
        raise CountMismatchError(msg)
    ordered = sorted(seen)
    for first, second in itertools.combinations(ordered, 2):
        if chords_cross(first, second):
            msg = f"chords {set(first)} and {set(second)} cross"
            raise CrossingChordsError(msg)
    return MopGraph(n, tuple(ordered))


def segment_length(graph: MopGraph, r: int, s: int) -> int:
    """Return the number of edges of the clockwise segment C[r, s]."""
    return (s - r) % graph.n


def degree_two_vertices(graph: MopGraph) -> List[int]:
    """Return the sorted positions of degree 2."""
    return [v for v in range(1, graph.n + 1) if graph.degree(v) == 2]  # noqa: PLR2004


def section_of(graph: MopGraph, r: int, s: int) -> Section:
    """
    Return the section G[r, s].

    Raises:
        NotAChordError: If `{r, s}` is not a chord.
    """
    if not graph.has_chord(r, s):
        msg = f"{{{r},{s}}} is not a chord"
        raise NotAChordError(msg)
    return Section(r, s, graph.segment(r, s)[1:-1])


def sections(graph: MopGraph) -> List[Section]:
    """Return both oriented sections of every chord, ordered by (r, s)."""
    result = []
    for u, v in graph.chords:
        result.append(Section(u, v, graph.segment(u, v)[1:-1]))
        result.append(Section(v, u, graph.segment(v, u)[1:-1]))
    return sorted(result, key=lambda section: (section.r, section.s))


def elementary_sections(graph: MopGraph) -> List[Section]:
    """Return the sections holding exactly one degree-2 vertex internally."""
    degree_two = set(degree_two_vertices(graph))
    return [
        section
        for section in sections(graph)
        if len(degree_two.intersection(section.internal)) == 1
    ]


def maximal_elementary_sections(graph: MopGraph) -> List[Section]:
    """Return the elementary sections not strictly inside another one."""
    elementary = elementary_sections(graph)
    return [
        section
        for section in elementary
        if not any(
            other != section and other.contains(section) for other in elementary
        )
    ]


@functools.lru_cache(maxsize=8192)
def inner_faces(graph: MopGraph) -> Tuple[Triangle, ...]:
    """Return the n - 2 inner triangles as sorted vertex triples."""
    faces = set()
    for u, v in graph.edges():
        for w in graph.neighbors(u) & graph.neighbors(v):
            faces.add(tuple(sorted((u, v, w))))
    return tuple(sorted(faces))  # type: ignore[arg-type]


def internal_triangles(graph: MopGraph) -> List[Triangle]:
    """Return the inner faces whose three edges are all chords."""
    return [
        face
        for face in inner_faces(graph)
        if not any(
            graph.is_boundary_edge(u, v) for u, v in itertools.combinations(face, 2)
        )
    ]


def is_striped(graph: MopGraph) -> bool:
    """Return True if the graph has no internal triangle."""
    return not internal_triangles(graph)


class InnerDual(msgspec.Struct, frozen=True):
    """Inner triangles of a MOP, adjacent when they share a chord."""

    nodes: Tuple[Triangle, ...]
    edges: Tuple[Pair, ...]

    def to_networkx(self) -> nx.Graph:
        """Return the dual as a networkx graph on node indices."""
        dual = nx.Graph()
        dual.add_nodes_from(range(len(self.nodes)))
        dual.add_edges_from(self.edges)
        return dual

    def is_tree(self) -> bool:
        """Return True if the dual is a tree."""
        return bool(nx.is_tree(self.to_networkx()))

    def is_path(self) -> bool:
        """Return True if the dual is a path."""
        dual = self.to_networkx()
        return bool(nx.is_tree(dual)) and max(
            (degree for _, degree in dual.degree()), default=0
        ) <= 2  # noqa: PLR2004


def inner_dual(graph: MopGraph) -> InnerDual:
    """Return the inner dual of the graph."""
    faces = inner_faces(graph)
    by_chord: Dict[Pair, List[int]] = {}
    for index, face in enumerate(faces):
        for u, v in itertools.combinations(face, 2):
            if graph.has_chord(u, v):
                by_chord.setdefault((u, v), []).append(index)
    edges = sorted(tuple(members) for members in by_chord.values())
    logger.debug("inner dual of n=%d has %d nodes", graph.n, len(faces))
    return InnerDual(faces, tuple(edges))  # type: ignore[arg-type]

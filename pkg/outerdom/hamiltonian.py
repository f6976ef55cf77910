"""Plane triangulations split along a Hamilton cycle."""

import logging
import math
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import msgspec
import networkx as nx

from outerdom.domination import (
    DEFAULT_BB_LIMIT,
    DominatingSet,
    SimpleGraph,
    dominating_vertex,
    gamma_cyclic_band,
    gamma_exact_bb,
    gamma_mop_dp,
    is_dominating,
)
from outerdom.exceptions import (
    BoundViolatedError,
    CertificateError,
    ConflictGraphNotBipartiteError,
    InvalidGraphError,
    NoHamiltonCycleError,
    NotFoundError,
    NotHamiltonCycleError,
    NotTriangulationError,
    SharedChordError,
    SideInvalidError,
    SolverTooLargeError,
    TooLargeError,
    TooSmallError,
)
from outerdom.mop import MopGraph, build_mop, canonical_pair, chords_cross
from outerdom.reductions import dominate_mop
from outerdom.value_objects import Branch, Pair, Side

logger = logging.getLogger(__name__)

DEFAULT_HAMILTON_LIMIT = 16
LARGE_N = 23


class HamTriangulation(msgspec.Struct, frozen=True):
    """
    A plane triangulation whose Hamilton cycle visits positions 1..n.

    `inner` and `outer` are the chords drawn inside and outside the cycle.
    `labels`, when set, gives the original vertex name of each position.
    """

    n: int
    inner: Tuple[Pair, ...]
    outer: Tuple[Pair, ...]
    labels: Tuple[int, ...] = ()

    def chords(self, side: Side) -> Tuple[Pair, ...]:
        """Return the chords of one side."""
        return self.inner if side is Side.INTERIOR else self.outer

    def swapped(self) -> "HamTriangulation":
        """Return the same triangulation with the two sides exchanged."""
        return HamTriangulation(self.n, self.outer, self.inner, self.labels)


class SideReport(msgspec.Struct, frozen=True):
    """Degree-2 vertices and chords of length two on one side of the cycle."""

    side: Side
    two_vertices: Tuple[int, ...]
    two_chords: Tuple[Pair, ...]

    @property
    def vertex_count(self) -> int:
        """Return the number of 2-vertices on this side."""
        return len(self.two_vertices)

    @property
    def chord_count(self) -> int:
        """Return the number of 2-chords on this side."""
        return len(self.two_chords)


class HaboGraph(msgspec.Struct, frozen=True):
    """The spanning subgraph made of the cycle and every 2-chord."""

    graph: SimpleGraph
    inner_chords: Tuple[Pair, ...]
    outer_chords: Tuple[Pair, ...]

    @property
    def chord_count(self) -> int:
        """Return the total number of 2-chords."""
        return len(self.inner_chords) + len(self.outer_chords)


class PipelineReport(msgspec.Struct):
    """How `dominate_triangulation` produced its set."""

    n: int
    branch: Branch
    c: int
    c_int: int
    c_ext: int
    vertices: Tuple[int, ...]
    size: int
    bound_5n16: int
    gamma_k_bound: int
    good_cycle: bool
    side: Optional[Side] = None
    attempts: List[str] = msgspec.field(default_factory=list)
    near_miss: bool = False

    @property
    def within_bound(self) -> bool:
        """Return True unless n >= 23 and the set exceeds floor(5n / 16)."""
        return self.n < LARGE_N or self.size <= self.bound_5n16


def build_ht(
    n: int,
    inner: Sequence[Sequence[int]],
    outer: Sequence[Sequence[int]],
) -> HamTriangulation:
    """
    Validate both sides and return a HamTriangulation.

    Raises:
        SideInvalidError: If a side is not a MOP; `side` names it.
        SharedChordError: If a chord is drawn on both sides.
    """
    graphs = {}
    for side, chords in ((Side.INTERIOR, inner), (Side.EXTERIOR, outer)):
        try:
            graphs[side] = build_mop(n, chords)
        except InvalidGraphError as exc:
            msg = f"{side.value} side is not maximal outerplane: {exc}"
            raise SideInvalidError(msg, side.value) from exc
    shared = set(graphs[Side.INTERIOR].chords) & set(graphs[Side.EXTERIOR].chords)
    if shared:
        msg = f"chords {sorted(shared)} are drawn on both sides"
        raise SharedChordError(msg)
    return HamTriangulation(
        n, graphs[Side.INTERIOR].chords, graphs[Side.EXTERIOR].chords
    )


def side_graph(triangulation: HamTriangulation, side: Side) -> MopGraph:
    """Return the MOP formed by the cycle and the chords of one side."""
    return MopGraph(triangulation.n, triangulation.chords(side))


def _middle(n: int, chord: Pair) -> Optional[int]:
    a, b = chord
    if (b - a) % n == 2:  # noqa: PLR2004
        return a % n + 1
    if (a - b) % n == 2:  # noqa: PLR2004
        return b % n + 1
    return None


def side_report(triangulation: HamTriangulation, side: Side) -> SideReport:
    """
    Return the 2-vertices and 2-chords of one side.

    Raises:
        CertificateError: If n >= 5 and the 2-chords do not match the
            2-vertices one to one.
    """
    graph = side_graph(triangulation, side)
    two_vertices = tuple(v for v in range(1, graph.n + 1) if graph.degree(v) == 2)  # noqa: PLR2004
    two_chords = tuple(
        chord for chord in graph.chords if _middle(graph.n, chord) is not None
    )
    if graph.n >= 5:  # noqa: PLR2004
        middles = sorted(_middle(graph.n, chord) or 0 for chord in two_chords)
        if middles != list(two_vertices):
            msg = f"{side.value} 2-chords {two_chords} do not match {two_vertices}"
            raise CertificateError(msg)
    return SideReport(side, two_vertices, two_chords)


def _cycle_edges(n: int) -> List[Pair]:
    return [canonical_pair(v, v % n + 1) for v in range(1, n + 1)]


def full_graph(triangulation: HamTriangulation) -> SimpleGraph:
    """Return the whole triangulation: cycle, inner and outer chords."""
    edges = [*_cycle_edges(triangulation.n), *triangulation.inner, *triangulation.outer]
    return SimpleGraph.from_edges(triangulation.n, edges)


def habo_graph(triangulation: HamTriangulation) -> HaboGraph:
    """Return the cycle plus all 2-chords of both sides as a spanning subgraph."""
    inner = side_report(triangulation, Side.INTERIOR).two_chords
    outer = side_report(triangulation, Side.EXTERIOR).two_chords
    graph = SimpleGraph.from_edges(
        triangulation.n, [*_cycle_edges(triangulation.n), *inner, *outer]
    )
    return HaboGraph(graph, inner, outer)


def two_vertices(triangulation: HamTriangulation) -> List[int]:
    """Return the positions with degree 2 on either side."""
    both = set(side_report(triangulation, Side.INTERIOR).two_vertices)
    both.update(side_report(triangulation, Side.EXTERIOR).two_vertices)
    return sorted(both)


def good_cycle_check(triangulation: HamTriangulation) -> bool:
    """Return True if no three cyclically consecutive positions are 2-vertices."""
    n = triangulation.n
    marked = set(two_vertices(triangulation))
    return not any(
        {v, v % n + 1, (v + 1) % n + 1} <= marked for v in range(1, n + 1)
    )


def embed_with_cycle(graph: SimpleGraph, cycle: Sequence[int]) -> HamTriangulation:
    """
    Split a triangulation along a Hamilton cycle.

    Vertices are relabelled by their position on `cycle`. Chords that cross
    must lie on opposite sides, so the sides are the two colour classes of the
    crossing graph of the chords.

    Raises:
        NotHamiltonCycleError: If `cycle` is not a Hamilton cycle of `graph`.
        NotTriangulationError: If the graph does not have 3n - 6 edges.
        ConflictGraphNotBipartiteError: If the chords admit no split.
    """
    n = graph.n
    if sorted(cycle) != list(range(1, n + 1)):
        msg = f"cycle {list(cycle)} is not a permutation of 1..{n}"
        raise NotHamiltonCycleError(msg)
    edges = set(graph.edges)
    for u, v in zip(cycle, [*cycle[1:], cycle[0]]):
        if canonical_pair(u, v) not in edges:
            msg = f"cycle uses {{{u},{v}}}, which is not an edge"
            raise NotHamiltonCycleError(msg)
    position = {v: index for index, v in enumerate(cycle, start=1)}
    boundary = set(_cycle_edges(n))
    chords = sorted(
        {canonical_pair(position[u], position[v]) for u, v in edges} - boundary
    )
    conflicts = nx.Graph()
    conflicts.add_nodes_from(chords)
    for index, first in enumerate(chords):
        for second in chords[index + 1 :]:
            if chords_cross(first, second):
                conflicts.add_edge(first, second)
    try:
        colouring = nx.bipartite.color(conflicts)
    except nx.NetworkXError as exc:
        msg = "the chords cannot be split into two noncrossing sides"
        raise ConflictGraphNotBipartiteError(msg) from exc
    if len(edges) != 3 * n - 6:
        msg = f"a triangulation on {n} vertices has {3 * n - 6} edges, got {len(edges)}"
        raise NotTriangulationError(msg)
    inner = [chord for chord in chords if colouring[chord] == 0]
    outer = [chord for chord in chords if colouring[chord] == 1]
    try:
        split = build_ht(n, inner, outer)
    except InvalidGraphError as exc:
        msg = f"the split along the cycle is not a triangulation: {exc}"
        raise NotTriangulationError(msg) from exc
    return msgspec.structs.replace(split, labels=tuple(cycle))


def iter_hamilton_cycles(
    graph: SimpleGraph,
    limit: int = DEFAULT_HAMILTON_LIMIT,
) -> Iterator[Tuple[int, ...]]:
    """
    Yield every Hamilton cycle once, starting at vertex 1.

    Each undirected cycle is reported in the direction whose second vertex is
    smaller than its last.

    Raises:
        TooLargeError: If the graph has more than `limit` vertices.
    """
    n = graph.n
    if n > limit:
        msg = f"Hamilton cycle search is limited to {limit} vertices, got {n}"
        raise TooLargeError(msg)
    if n < 3:  # noqa: PLR2004
        return
    path = [1]
    visited = {1}

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(path) == n:
            if 1 in graph.neighbors(path[-1]) and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in graph.neighbors(path[-1]):
            if w in visited:
                continue
            path.append(w)
            visited.add(w)
            yield from extend()
            visited.discard(w)
            path.pop()

    yield from extend()


def find_hamilton_cycle(
    graph: SimpleGraph,
    limit: int = DEFAULT_HAMILTON_LIMIT,
) -> Tuple[int, ...]:
    """
    Return the first Hamilton cycle found by backtracking.

    Raises:
        NoHamiltonCycleError: If there is none.
        TooLargeError: If the graph has more than `limit` vertices.
    """
    for cycle in iter_hamilton_cycles(graph, limit):
        return cycle
    msg = f"graph on {graph.n} vertices has no Hamilton cycle"
    raise NoHamiltonCycleError(msg)


def find_good_cycle(
    graph: SimpleGraph,
    limit: int = DEFAULT_HAMILTON_LIMIT,
) -> HamTriangulation:
    """
    Return the split along the first good Hamilton cycle.

    A cycle is good when no side has three consecutive 2-vertices.

    Raises:
        NoHamiltonCycleError: If the graph has no Hamilton cycle.
        NotFoundError: If every Hamilton cycle is bad; `tried` counts them.
        TooLargeError: If the graph has more than `limit` vertices.
    """
    tried = 0
    for cycle in iter_hamilton_cycles(graph, limit):
        tried += 1
        try:
            split = embed_with_cycle(graph, cycle)
        except ConflictGraphNotBipartiteError:
            logger.debug("cycle %s does not split the graph", cycle)
            continue
        if good_cycle_check(split):
            logger.debug("good cycle %s after %d tries", cycle, tried)
            return split
    if tried == 0:
        msg = f"graph on {graph.n} vertices has no Hamilton cycle"
        raise NoHamiltonCycleError(msg)
    msg = f"none of {tried} Hamilton cycles is good"
    raise NotFoundError(msg, tried)


def _five_sixteenths(n: int) -> Tuple[int, int]:
    return (5 * n) // 16, -(-5 * n // 16)


def _habo_branch(
    triangulation: HamTriangulation,
    habo: HaboGraph,
    *,
    limit_bb: int,
    banded_k: bool,
) -> DominatingSet:
    n = triangulation.n
    if n <= limit_bb:
        solution = gamma_exact_bb(habo.graph, limit=limit_bb)
    elif banded_k:
        solution = gamma_cyclic_band(habo.graph, width=2)
    else:
        msg = f"K on {n} vertices exceeds the exact solver limit {limit_bb}"
        raise SolverTooLargeError(msg)
    bound = math.ceil(2 * n / 7)
    if solution.size > bound:
        msg = f"gamma(K) = {solution.size} exceeds ceil(2n/7) = {bound} for n={n}"
        logger.error(msg)
        raise BoundViolatedError(msg, payload=triangulation)
    return solution


def _side_branch(
    triangulation: HamTriangulation,
    counts: Dict[Side, int],
    attempts: List[str],
) -> Tuple[DominatingSet, Side, Branch]:
    n = triangulation.n
    qualifying = [side for side in Side if 4 * counts[side] <= n]
    if not qualifying:
        msg = f"no side has at most n/4 2-chords (counts {counts})"
        raise CertificateError(msg)
    floor_bound, _ = _five_sixteenths(n)
    results: List[Tuple[int, int, DominatingSet, Side, Branch]] = []
    for order, side in enumerate(qualifying):
        trace = dominate_mop(side_graph(triangulation, side))
        attempts.append(f"{side.value}:engine={trace.final.size}")
        results.append((trace.final.size, order, trace.final, side, Branch.SIDE))
    size, _, best, side, branch = min(results, key=lambda item: item[:2])
    if n >= LARGE_N and size > floor_bound:
        exact = []
        for order, side in enumerate(qualifying):
            solution = gamma_mop_dp(side_graph(triangulation, side))
            attempts.append(f"{side.value}:exact={solution.size}")
            exact.append((solution.size, order, solution, side, Branch.SIDE_EXACT))
        size, _, best, side, branch = min(exact, key=lambda item: item[:2])
    return best, side, branch


def dominate_triangulation(
    triangulation: HamTriangulation,
    *,
    limit_bb: int = DEFAULT_BB_LIMIT,
    banded_k: bool = True,
) -> Tuple[DominatingSet, PipelineReport]:
    """
    Dominate a Hamiltonian triangulation.

    A dominating vertex is returned alone. If the cycle has at least (n + 1)/2
    2-chords, K is solved exactly and checked against ceil(2n/7); for n >= 23 a
    qualifying side is also tried when that set exceeds floor(5n/16). Otherwise a
    side with at most n/4 2-chords is dominated by the reduction engine, falling
    back to the exact side solution when n >= 23 and the engine's set exceeds
    floor(5n/16). Any side MOP spans the triangulation, so its sets dominate
    the whole graph.

    Raises:
        TooSmallError: If n < 4.
        SolverTooLargeError: If K must be solved beyond the exact limits.
        BoundViolatedError: If n >= 23 and the set exceeds floor(5n/16). The
            payload is the `PipelineReport`, with `near_miss` set when the size
            is ceil(5n/16).
    """
    n = triangulation.n
    if n < 4:  # noqa: PLR2004
        msg = f"the pipeline needs at least 4 vertices, got {n}"
        raise TooSmallError(msg)
    full = full_graph(triangulation)
    good = good_cycle_check(triangulation)
    if not good:
        logger.warning("Hamilton cycle has three consecutive 2-vertices")
    habo = habo_graph(triangulation)
    counts = {
        Side.INTERIOR: len(habo.inner_chords),
        Side.EXTERIOR: len(habo.outer_chords),
    }
    attempts: List[str] = []
    side: Optional[Side] = None
    vertex = dominating_vertex(full)
    if vertex is not None:
        branch = Branch.DOMINATING_VERTEX
        vertices: Sequence[int] = [vertex]
    elif 2 * habo.chord_count >= n + 1:
        branch = Branch.HABO
        vertices = _habo_branch(
            triangulation, habo, limit_bb=limit_bb, banded_k=banded_k
        ).vertices
        attempts.append(f"habo={len(vertices)}")
        floor_bound, _ = _five_sixteenths(n)
        if (
            n >= LARGE_N
            and len(vertices) > floor_bound
            and 4 * min(counts.values()) <= n
        ):
            solution, side, branch = _side_branch(triangulation, counts, attempts)
            vertices = solution.vertices
    else:
        if 4 * min(counts.values()) > n:
            msg = f"c={habo.chord_count} <= n/2 but both sides exceed n/4"
            raise CertificateError(msg)
        solution, side, branch = _side_branch(triangulation, counts, attempts)
        vertices = solution.vertices
    attempts.append(branch.value)
    result = DominatingSet.of(full, vertices)
    if not is_dominating(full, result.vertices):
        msg = f"{branch.value} branch returned a non-dominating set"
        raise CertificateError(msg)
    floor_bound, ceil_bound = _five_sixteenths(n)
    report = PipelineReport(
        n=n,
        branch=branch,
        c=habo.chord_count,
        c_int=counts[Side.INTERIOR],
        c_ext=counts[Side.EXTERIOR],
        vertices=result.vertices,
        size=result.size,
        bound_5n16=floor_bound,
        gamma_k_bound=math.ceil(2 * n / 7),
        good_cycle=good,
        side=side,
        attempts=attempts,
        near_miss=n >= LARGE_N and floor_bound < result.size <= ceil_bound,
    )
    logger.debug("pipeline n=%d branch=%s size=%d", n, branch.value, result.size)
    if not report.within_bound:
        if report.near_miss:
            logger.warning("near miss: size %d = ceil(5n/16) for n=%d", report.size, n)
        msg = f"set of size {result.size} exceeds floor(5n/16) = {floor_bound}"
        logger.error("%s: %s", msg, msgspec.json.encode(report).decode())
        raise BoundViolatedError(msg, payload=report)
    return result, report

"""Exact minimum dominating sets."""

import functools
import hashlib
import itertools
import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import msgspec

from outerdom.exceptions import (
    BadIndexError,
    InvalidGraphError,
    NotBandedError,
    TooLargeError,
)
from outerdom.mop import MopGraph
from outerdom.value_objects import Pair, VertexState

logger = logging.getLogger(__name__)

DEFAULT_BB_LIMIT = 32


class SimpleGraph(msgspec.Struct, frozen=True):
    """An undirected simple graph on vertices 1..n."""

    n: int
    edges: Tuple[Pair, ...] = ()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        """
        Build a graph, dropping duplicate edges.

        Raises:
            BadIndexError: On loops or positions outside 1..n.
        """
        pairs = set()
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                msg = f"edge {{{u},{v}}} is a loop or leaves 1..{n}"
                raise BadIndexError(msg)
            pairs.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(pairs)))

    @classmethod
    def from_mop(cls, graph: MopGraph) -> "SimpleGraph":
        """Return the underlying graph of a MOP."""
        return cls(graph.n, tuple(graph.edges()))

    @property
    def graph_id(self) -> str:
        """Return a digest of the edge set."""
        return graph_digest(self)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Return the sorted neighbours of `v`."""
        return neighbor_lists(self)[v]


class DominatingSet(msgspec.Struct, frozen=True):
    """A vertex set together with the digest of the graph it dominates."""

    vertices: Tuple[int, ...]
    size: int
    graph_id: str

    @classmethod
    def of(cls, graph: SimpleGraph, vertices: Iterable[int]) -> "DominatingSet":
        """Build a set certified against `graph`."""
        ordered = tuple(sorted(set(vertices)))
        return cls(ordered, len(ordered), graph.graph_id)


@functools.lru_cache(maxsize=8192)
def graph_digest(graph: SimpleGraph) -> str:
    """Return a short sha256 digest of the vertex count and edge set."""
    payload = msgspec.json.encode([graph.n, graph.edges])
    return hashlib.sha256(payload).hexdigest()[:16]


@functools.lru_cache(maxsize=8192)
def neighbor_lists(graph: SimpleGraph) -> Tuple[Tuple[int, ...], ...]:
    """Return sorted neighbour tuples indexed by vertex (index 0 unused)."""
    neighbors: List[List[int]] = [[] for _ in range(graph.n + 1)]
    for u, v in graph.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    return tuple(tuple(sorted(vertices)) for vertices in neighbors)


@functools.lru_cache(maxsize=8192)
def closed_masks(graph: SimpleGraph) -> Tuple[int, ...]:
    """Return closed neighbourhoods as bitmasks, bit v - 1 for vertex v."""
    masks = [1 << (v - 1) for v in range(1, graph.n + 1)]
    for u, v in graph.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return tuple(masks)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> Iterator[int]:
    """Yield the vertices whose bits are set, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def is_dominating(graph: SimpleGraph, vertices: Iterable[int]) -> bool:
    """
    Return True if the closed neighbourhoods of `vertices` cover the graph.

    Raises:
        BadIndexError: If a vertex lies outside 1..n.
    """
    masks = closed_masks(graph)
    covered = 0
    for v in vertices:
        if not 1 <= v <= graph.n:
            msg = f"vertex {v} outside 1..{graph.n}"
            raise BadIndexError(msg)
        covered |= masks[v - 1]
    return covered == (1 << graph.n) - 1


def dominating_vertex(graph: SimpleGraph) -> Optional[int]:
    """Return the least vertex adjacent to all others, if any."""
    full = (1 << graph.n) - 1
    for v, mask in enumerate(closed_masks(graph), start=1):
        if mask == full:
            return v
    return None


def greedy_dominating_set(graph: SimpleGraph) -> DominatingSet:
    """Return a dominating set built by repeatedly taking the largest gain."""
    masks = closed_masks(graph)
    full = (1 << graph.n) - 1
    covered = 0
    chosen = []
    while covered != full:
        best = max(
            range(graph.n),
            key=lambda index: (_popcount(masks[index] & ~covered), -index),
        )
        chosen.append(best + 1)
        covered |= masks[best]
    return DominatingSet.of(graph, chosen)


def gamma_exact_bb(
    graph: SimpleGraph,
    limit: int = DEFAULT_BB_LIMIT,
) -> DominatingSet:
    """
    Return a minimum dominating set by branch and bound.

    Branches on the undominated vertex with the fewest candidate dominators,
    trying candidates by decreasing gain; prunes with the greedy upper bound and
    the coverage lower bound ceil(uncovered / best gain).

    Args:
        graph: The graph.
        limit: Largest vertex count accepted.

    Raises:
        TooLargeError: If the graph has more than `limit` vertices.
    """
    if graph.n > limit:
        msg = f"branch and bound is limited to {limit} vertices, got {graph.n}"
        raise TooLargeError(msg)
    if graph.n == 0:
        return DominatingSet.of(graph, [])
    masks = closed_masks(graph)
    full = (1 << graph.n) - 1
    best: List[int] = list(greedy_dominating_set(graph).vertices)
    chosen: List[int] = []

    def search(covered: int) -> None:
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        uncovered = full & ~covered
        top_gain = max(_popcount(mask & uncovered) for mask in masks)
        lower = len(chosen) + -(-_popcount(uncovered) // top_gain)
        if lower >= len(best):
            return
        target = min(_bits(uncovered), key=lambda v: (_popcount(masks[v - 1]), v))
        candidates = sorted(
            _bits(masks[target - 1]),
            key=lambda v: (-_popcount(masks[v - 1] & uncovered), v),
        )
        for candidate in candidates:
            chosen.append(candidate)
            search(covered | masks[candidate - 1])
            chosen.pop()

    search(0)
    logger.debug("branch and bound: n=%d gamma=%d", graph.n, len(best))
    return DominatingSet.of(graph, best)


def minimum_dominating_sets(
    graph: SimpleGraph,
    limit: int = DEFAULT_BB_LIMIT,
) -> Iterator[DominatingSet]:
    """Yield every minimum dominating set, in lexicographic order."""
    gamma = gamma_exact_bb(graph, limit).size
    masks = closed_masks(graph)
    full = (1 << graph.n) - 1
    for combo in itertools.combinations(range(1, graph.n + 1), gamma):
        covered = 0
        for v in combo:
            covered |= masks[v - 1]
        if covered == full:
            yield DominatingSet.of(graph, combo)


Entry = Tuple[int, Tuple[int, ...]]
Table = Dict[Tuple[VertexState, VertexState], Entry]

_CHOSEN = VertexState.CHOSEN
_DOMINATED = VertexState.DOMINATED
_PENDING = VertexState.PENDING


def _keep(table: Table, key: Tuple[VertexState, VertexState], entry: Entry) -> None:
    current = table.get(key)
    if current is None or entry < current:
        table[key] = entry


def _edge_table() -> Table:
    return {
        (a, b): (0, ()) for a in (_CHOSEN, _PENDING) for b in (_CHOSEN, _PENDING)
    }


def _combine(left: Table, right: Table, apex: int) -> Table:
    """Join the tables of P(a, c) and P(c, b) through the triangle (a, c, b)."""
    table: Table = {}
    for (state_a, state_c1), (cost_left, set_left) in left.items():
        for (state_c2, state_b), (cost_right, set_right) in right.items():
            if (state_c1 is _CHOSEN) != (state_c2 is _CHOSEN):
                continue
            if state_c1 is _CHOSEN:
                new_a = _CHOSEN if state_a is _CHOSEN else _DOMINATED
                new_b = _CHOSEN if state_b is _CHOSEN else _DOMINATED
                entry = (cost_left + cost_right + 1, (*set_left, apex, *set_right))
            else:
                apex_covered = _DOMINATED in (state_c1, state_c2) or _CHOSEN in (
                    state_a,
                    state_b,
                )
                if not apex_covered:
                    continue
                new_a, new_b = state_a, state_b
                entry = (cost_left + cost_right, (*set_left, *set_right))
            _keep(table, (new_a, new_b), entry)
    return table


def _apex(graph: MopGraph, a: int, b: int) -> int:
    for c in sorted(graph.neighbors(a) & graph.neighbors(b)):
        if a < c < b:
            return c
    msg = f"no triangle on edge {{{a},{b}}}; not a maximal outerplane graph"
    raise InvalidGraphError(msg)


def gamma_mop_dp(graph: MopGraph) -> DominatingSet:
    """
    Return a minimum dominating set of a MOP by DP over its inner dual.

    Rooted at the boundary edge {1, n}: every edge (a, b) with a + 1 < b closes
    the sub-polygon a..b, whose triangle (a, c, b) splits it into P(a, c) and
    P(c, b). A table maps the states of a and b (chosen, dominated by a chosen
    internal vertex, or pending) to the cheapest set of chosen internal
    vertices that dominates every internal vertex.

    Raises:
        InvalidGraphError: If some edge has no triangle inside its sub-polygon.
    """
    simple = SimpleGraph.from_mop(graph)
    tables: Dict[Tuple[int, int], Table] = {}
    stack = [(1, graph.n, False)]
    while stack:
        a, b, expanded = stack.pop()
        if b == a + 1:
            tables[(a, b)] = _edge_table()
            continue
        c = _apex(graph, a, b)
        if not expanded:
            stack.extend([(a, b, True), (c, b, False), (a, c, False)])
        else:
            tables[(a, b)] = _combine(tables.pop((a, c)), tables.pop((c, b)), c)
    best: Optional[Entry] = None
    for (state_a, state_b), (cost, chosen) in tables[(1, graph.n)].items():
        a_ok = state_a is not _PENDING or state_b is _CHOSEN
        b_ok = state_b is not _PENDING or state_a is _CHOSEN
        if not (a_ok and b_ok):
            continue
        ends = [1] if state_a is _CHOSEN else []
        tail = [graph.n] if state_b is _CHOSEN else []
        entry = (
            cost + len(ends) + len(tail),
            (*ends, *chosen, *tail),
        )
        if best is None or entry < best:
            best = entry
    if best is None:
        msg = "domination DP produced no feasible state"
        raise InvalidGraphError(msg)
    logger.debug("mop dp: n=%d gamma=%d", graph.n, best[0])
    return DominatingSet.of(simple, best[1])


def gamma_cyclic_band(graph: SimpleGraph, width: int = 2) -> DominatingSet:
    """
    Return a minimum dominating set of a graph of small cyclic bandwidth.

    Every edge must join vertices at cyclic distance at most `width` in the
    order 1..n. The chosen bits of the first 2 * width vertices are enumerated;
    a sliding window of the last 2 * width decisions is the DP state, and each
    vertex is checked as soon as its whole neighbourhood is decided.

    Raises:
        NotBandedError: If an edge is longer than `width`.
    """
    n = graph.n
    for u, v in graph.edges:
        if min(v - u, n - (v - u)) > width:
            msg = f"edge {{{u},{v}}} exceeds cyclic band width {width}"
            raise NotBandedError(msg)
    span = 2 * width
    if n < 2 * span + 1:
        return gamma_exact_bb(graph, limit=max(n, DEFAULT_BB_LIMIT))
    masks = closed_masks(graph)

    def dominated(v: int, chosen_of: Dict[int, int]) -> bool:
        return any(chosen_of[w] for w in _bits(masks[v - 1]))

    best: Optional[Entry] = None
    for head in range(1 << span):
        head_bits = {v: (head >> (v - 1)) & 1 for v in range(1, span + 1)}
        # state: chosen bits of the last `span` decided vertices, oldest first
        start_state = tuple(head_bits[v] for v in range(1, span + 1))
        start_set = tuple(v for v in range(1, span + 1) if head_bits[v])
        layer: Dict[Tuple[int, ...], Entry] = {start_state: (len(start_set), start_set)}
        for i in range(span + 1, n + 1):
            next_layer: Dict[Tuple[int, ...], Entry] = {}
            check = i - width
            for state, (cost, chosen) in layer.items():
                for bit in (0, 1):
                    window = {
                        i - span + offset: state[offset] for offset in range(span)
                    }
                    window[i] = bit
                    if not dominated(check, window):
                        continue
                    entry = (cost + bit, (*chosen, i) if bit else chosen)
                    key = (*state[1:], bit)
                    current = next_layer.get(key)
                    if current is None or entry < current:
                        next_layer[key] = entry
            layer = next_layer
        for state, entry in layer.items():
            chosen_of = dict(head_bits)
            chosen_of.update(
                {n - span + 1 + offset: state[offset] for offset in range(span)}
            )
            tail = [*range(n - width + 1, n + 1), *range(1, width + 1)]
            if all(dominated(v, chosen_of) for v in tail) and (
                best is None or entry < best
            ):
                best = entry
    if best is None:
        msg = "cyclic band DP produced no feasible state"
        raise InvalidGraphError(msg)
    logger.debug("cyclic band dp: n=%d gamma=%d", n, best[0])
    return DominatingSet.of(graph, best[1])

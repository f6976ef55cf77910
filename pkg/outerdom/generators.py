"""Exhaustive and random MOPs and Hamiltonian triangulations, and named graphs."""

import enum
import functools
import itertools
import logging
import math
import random
from typing import Callable, Iterator, List, Optional, Union

import msgspec

from outerdom.exceptions import TooLargeError, TooSmallError, UnknownNameError
from outerdom.hamiltonian import HamTriangulation, build_ht
from outerdom.mop import MopGraph, build_mop, canonical_pair, degree_two_vertices
from outerdom.value_objects import Pair

logger = logging.getLogger(__name__)

DEFAULT_MOP_LIMIT = 16
DEFAULT_HT_LIMIT = 9

FIGURE2_CHORDS = (
    (1, 3),
    (1, 5),
    (3, 5),
    (5, 7),
    (5, 9),
    (5, 14),
    (7, 9),
    (9, 11),
    (9, 13),
    (9, 14),
    (11, 13),
)

# draws allowed per requested graph before a filtered corpus gives up
MAX_DRAWS_PER_GRAPH = 1000


class CorpusKind(str, enum.Enum):
    """Kinds of graph in a corpus."""

    MOP = "mop"
    HAM_TRIANGULATION = "ham-triangulation"


class CorpusMode(str, enum.Enum):
    """How a corpus is drawn."""

    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class CorpusSpec(msgspec.Struct, frozen=True):
    """
    A reproducible stream of test graphs.

    A random corpus draws `count` graphs of every size, or, when `total` is
    set, cycles through the sizes until `total` graphs have been kept.
    """

    kind: CorpusKind
    n_min: int
    n_max: int
    mode: CorpusMode = CorpusMode.EXHAUSTIVE
    seed: int = 0
    count: int = 0
    total: int = 0


@functools.lru_cache(maxsize=None)
def catalan(m: int) -> int:
    """Return the m-th Catalan number."""
    return math.comb(2 * m, m) // (m + 1)


def _triangulations(first: int, last: int) -> Iterator[List[Pair]]:
    """Yield the chord lists of the polygon first..last closed by {first, last}."""
    if last - first < 2:  # noqa: PLR2004
        yield []
        return
    for apex in range(first + 1, last):
        own = []
        if apex - first > 1:
            own.append(canonical_pair(first, apex))
        if last - apex > 1:
            own.append(canonical_pair(apex, last))
        for left in _triangulations(first, apex):
            for right in _triangulations(apex, last):
                yield [*left, *right, *own]


def enumerate_mops(
    n: int,
    start: int = 0,
    limit: int = DEFAULT_MOP_LIMIT,
) -> Iterator[MopGraph]:
    """
    Yield every triangulation of the labelled n-gon once, in a fixed order.

    The apex of the triangle on {1, n} is chosen first, then each side is
    triangulated recursively. `start` skips that many graphs.

    Raises:
        TooSmallError: If n < 3.
        TooLargeError: If n exceeds `limit`.
    """
    if n < 3:  # noqa: PLR2004
        msg = f"a maximal outerplane graph needs at least 3 vertices, got {n}"
        raise TooSmallError(msg)
    if n > limit:
        msg = f"exhaustive enumeration is limited to n <= {limit}, got {n}"
        raise TooLargeError(msg)
    for chords in itertools.islice(_triangulations(1, n), start, None):
        yield MopGraph(n, tuple(sorted(chords)))


def _sample_chords(rng: random.Random, first: int, last: int) -> List[Pair]:
    chords = []
    stack = [(first, last)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:  # noqa: PLR2004
            continue
        apices = range(a + 1, b)
        weights = [catalan(c - a - 1) * catalan(b - c - 1) for c in apices]
        apex = rng.choices(apices, weights=weights)[0]
        if apex - a > 1:
            chords.append(canonical_pair(a, apex))
        if b - apex > 1:
            chords.append(canonical_pair(apex, b))
        stack.extend([(a, apex), (apex, b)])
    return chords


def random_mop(n: int, seed: int = 0) -> MopGraph:
    """
    Return a uniformly random triangulation of the labelled n-gon.

    Apices are drawn with weight equal to the number of triangulations they
    leave on either side, so every outcome has probability 1 / C(n - 2).
    """
    if n < 3:  # noqa: PLR2004
        msg = f"a maximal outerplane graph needs at least 3 vertices, got {n}"
        raise TooSmallError(msg)
    rng = random.Random(seed)  # noqa: S311
    return MopGraph(n, tuple(sorted(_sample_chords(rng, 1, n))))


def random_ht(n: int, seed: int = 0) -> HamTriangulation:
    """
    Return a uniformly random Hamiltonian triangulation on the cycle 1..n.

    Both sides are redrawn until they share no chord, so every ordered pair of
    disjoint sides is equally likely.
    """
    if n < 4:  # noqa: PLR2004
        msg = f"a Hamiltonian triangulation needs at least 4 vertices, got {n}"
        raise TooSmallError(msg)
    rng = random.Random(seed)  # noqa: S311
    while True:
        inner = _sample_chords(rng, 1, n)
        outer = _sample_chords(rng, 1, n)
        if not set(inner) & set(outer):
            return build_ht(n, inner, outer)


def enumerate_hts(
    n: int,
    start: int = 0,
    limit: int = DEFAULT_HT_LIMIT,
) -> Iterator[HamTriangulation]:
    """
    Yield every Hamiltonian triangulation on n labelled vertices.

    Each is an ordered pair of n-gon triangulations with disjoint chords.

    Raises:
        TooSmallError: If n < 4.
        TooLargeError: If n exceeds `limit`.
    """
    if n < 4:  # noqa: PLR2004
        msg = f"a Hamiltonian triangulation needs at least 4 vertices, got {n}"
        raise TooSmallError(msg)
    if n > limit:
        msg = f"exhaustive enumeration is limited to n <= {limit}, got {n}"
        raise TooLargeError(msg)
    sides = list(enumerate_mops(n, limit=limit))
    pairs = (
        HamTriangulation(n, inner.chords, outer.chords)
        for inner, outer in itertools.product(sides, repeat=2)
        if not set(inner.chords) & set(outer.chords)
    )
    yield from itertools.islice(pairs, start, None)


def figure2() -> MopGraph:
    """
    Return the 14-vertex MOP with one essential pair and domination number 4.

    It is one of the triangulations of the 14-gon that an exhaustive search
    over gamma > (n + k) / 4 returns. Chords are stored sorted.
    """
    return build_mop(14, FIGURE2_CHORDS)


def figure2_family(m: int) -> MopGraph:
    """
    Return the 14 + 4m vertex extension of `figure2`.

    The least-index vertex v whose two cycle neighbours have degree 2 is
    replaced by a path p0..p4m carrying the 2m ears {p2i, p2i+2}. The chord of
    v in the face on its clockwise boundary edge moves to p4m and the other
    chords of v move to p0; the polygon p0, p2, ..., p4m, y left between them
    (y the apex of that face) is fanned from p0.
    """
    if m < 1:
        msg = f"the extension needs m >= 1, got {m}"
        raise TooSmallError(msg)
    base = figure2()
    degree_two = set(degree_two_vertices(base))
    v = next(
        u
        for u in range(1, base.n + 1)
        if u not in degree_two
        and base.successor(u) in degree_two
        and base.predecessor(u) in degree_two
    )
    apex = min(base.neighbors(v) & base.neighbors(base.successor(v)))
    length = 4 * m

    def relabel(u: int) -> int:
        return u if u < v else u + length

    p0, last = v, v + length
    chords = []
    for a, b in base.chords:
        if v not in (a, b):
            chords.append((relabel(a), relabel(b)))
            continue
        other = b if a == v else a
        chords.append((last if other == apex else p0, relabel(other)))
    chords.extend((p0 + 2 * i, p0 + 2 * i + 2) for i in range(2 * m))
    chords.extend((p0, p0 + 2 * j) for j in range(2, 2 * m + 1))
    chords.append((p0, relabel(apex)))
    return build_mop(base.n + length, chords)


def octahedron() -> HamTriangulation:
    """Return the octahedron split along the cycle 1..6."""
    return build_ht(6, [(1, 3), (3, 5), (1, 5)], [(2, 4), (4, 6), (2, 6)])


def seven_vertex() -> HamTriangulation:
    """Return a 7-vertex triangulation with domination number 2."""
    return build_ht(
        7,
        [(1, 3), (3, 5), (1, 5), (5, 7)],
        [(2, 4), (4, 6), (2, 6), (1, 6)],
    )


def hexagon_fan3() -> MopGraph:
    """Return the hexagon with the three chords of the inner triangle 1, 3, 5."""
    return build_mop(6, [(1, 3), (3, 5), (1, 5)])


NAMED_GRAPHS = {
    "octahedron": octahedron,
    "seven_vertex_fig1": seven_vertex,
    "figure2": figure2,
    "hexagon_fan3": hexagon_fan3,
}


def named_graph(name: str) -> Union[MopGraph, HamTriangulation]:
    """
    Return a named graph.

    Raises:
        UnknownNameError: If `name` is not one of `NAMED_GRAPHS`.
    """
    try:
        factory = NAMED_GRAPHS[name]
    except KeyError as exc:
        msg = f"unknown graph {name!r}; choose from {sorted(NAMED_GRAPHS)}"
        raise UnknownNameError(msg) from exc
    return factory()


def _draw(spec: CorpusSpec, n: int, index: int) -> Union[MopGraph, HamTriangulation]:
    sampler = random_mop if spec.kind is CorpusKind.MOP else random_ht
    return sampler(n, seed=spec.seed * 1_000_003 + n * 10_007 + index)


def _draw_total(
    spec: CorpusSpec,
    keep: Optional[Callable[[Union[MopGraph, HamTriangulation]], bool]],
) -> Iterator[Union[MopGraph, HamTriangulation]]:
    sizes = range(spec.n_min, spec.n_max + 1)
    kept = 0
    for draw in range(spec.total * MAX_DRAWS_PER_GRAPH):
        graph = _draw(spec, sizes[draw % len(sizes)], draw // len(sizes))
        if keep is not None and not keep(graph):
            continue
        yield graph
        kept += 1
        if kept == spec.total:
            return
    logger.warning("kept %d of %d graphs before giving up", kept, spec.total)


def iter_corpus(
    spec: CorpusSpec,
    limit: Optional[int] = None,
    keep: Optional[Callable[[Union[MopGraph, HamTriangulation]], bool]] = None,
) -> Iterator[Union[MopGraph, HamTriangulation]]:
    """
    Yield the graphs described by `spec`, size by size.

    Args:
        spec: The corpus.
        limit: Largest n enumerated exhaustively.
        keep: Filter applied to a random corpus with a `total`; rejected draws
            do not count towards it.
    """
    if spec.mode is CorpusMode.RANDOM and spec.total:
        yield from _draw_total(spec, keep)
        return
    for n in range(spec.n_min, spec.n_max + 1):
        if spec.mode is CorpusMode.RANDOM:
            for index in range(spec.count):
                yield _draw(spec, n, index)
        elif spec.kind is CorpusKind.MOP:
            yield from enumerate_mops(n, limit=limit or DEFAULT_MOP_LIMIT)
        else:
            yield from enumerate_hts(n, limit=limit or DEFAULT_HT_LIMIT)

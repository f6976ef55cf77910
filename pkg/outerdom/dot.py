"""Graphviz DOT export."""

from typing import Iterable, List, Set, Union

from outerdom.bounds import bad_vertices
from outerdom.hamiltonian import HamTriangulation, two_vertices
from outerdom.mop import MopGraph, degree_two_vertices

_HEADER = [
    "  layout=circo;",
    '  node [shape=circle, fontname="Helvetica"];',
]


def _node_lines(
    n: int,
    filled: Set[int],
    red: Set[int],
    chosen: Set[int],
) -> List[str]:
    lines = []
    for v in range(1, n + 1):
        attributes = []
        if v in filled:
            attributes.extend(["style=filled", "fillcolor=lightgrey"])
        if v in red:
            attributes.append("color=red")
        if v in chosen:
            attributes.append("peripheries=2")
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        lines.append(f"  {v}{suffix};")
    return lines


def _cycle_lines(n: int) -> List[str]:
    return [f"  {v} -- {v % n + 1};" for v in range(1, n + 1)]


def mop_to_dot(graph: MopGraph, dominating: Iterable[int] = ()) -> str:
    """
    Return a MOP as DOT.

    Boundary edges are solid and chords dashed; degree-2 vertices are filled,
    bad vertices outlined red and members of `dominating` doubly circled.
    """
    lines = [f"graph mop_{graph.n} {{", *_HEADER]
    lines.extend(
        _node_lines(
            graph.n,
            set(degree_two_vertices(graph)),
            set(bad_vertices(graph)) if graph.n > 3 else set(),  # noqa: PLR2004
            set(dominating),
        )
    )
    lines.extend(_cycle_lines(graph.n))
    lines.extend(f"  {u} -- {v} [style=dashed];" for u, v in graph.chords)
    lines.append("}")
    return "\n".join(lines) + "\n"


def ht_to_dot(triangulation: HamTriangulation, dominating: Iterable[int] = ()) -> str:
    """Return a triangulation as DOT: inner chords blue, outer chords green."""
    n = triangulation.n
    lines = [f"graph ht_{n} {{", *_HEADER]
    marked = set(two_vertices(triangulation))
    lines.extend(_node_lines(n, marked, set(), set(dominating)))
    lines.extend(_cycle_lines(n))
    lines.extend(f"  {u} -- {v} [color=blue];" for u, v in triangulation.inner)
    lines.extend(
        f"  {u} -- {v} [color=green, style=dashed];" for u, v in triangulation.outer
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(
    graph: Union[MopGraph, HamTriangulation],
    dominating: Iterable[int] = (),
) -> str:
    """Return the DOT diagram of a MOP or a triangulation."""
    if isinstance(graph, MopGraph):
        return mop_to_dot(graph, dominating)
    return ht_to_dot(graph, dominating)

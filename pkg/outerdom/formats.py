"""JSON and JSONL file formats."""

from typing import Iterable, Iterator, List, Optional, Tuple, Union

import msgspec

from outerdom.domination import SimpleGraph
from outerdom.exceptions import InvalidGraphError, InvalidInputError
from outerdom.hamiltonian import HamTriangulation, build_ht
from outerdom.mop import MopGraph, build_mop


class _GraphFile(msgspec.Struct, tag_field="type"):
    """Base class for graph files."""

    n: int


class MopFile(_GraphFile, tag="mop"):
    """A maximal outerplane graph."""

    chords: List[Tuple[int, int]] = []


class GraphFile(_GraphFile, tag="graph"):
    """A simple graph, optionally with a Hamilton cycle to split it along."""

    edges: List[Tuple[int, int]] = []
    cycle: Optional[List[int]] = None


class HtFile(_GraphFile, tag="ham-triangulation"):
    """A triangulation split along the cycle 1..n."""

    inner: List[Tuple[int, int]] = []
    outer: List[Tuple[int, int]] = []


AnyGraphFile = Union[MopFile, GraphFile, HtFile]
AnyGraph = Union[MopGraph, HamTriangulation, SimpleGraph]

_decoder = msgspec.json.Decoder(AnyGraphFile)


def decode_file(data: Union[bytes, str]) -> AnyGraphFile:
    """
    Decode one graph document.

    Raises:
        InvalidInputError: If the document is not a known graph file.
    """
    try:
        return _decoder.decode(data)
    except msgspec.DecodeError as exc:
        msg = f"cannot decode graph file: {exc}"
        raise InvalidInputError(msg) from exc


def to_graph(document: AnyGraphFile) -> Tuple[AnyGraph, Optional[List[int]]]:
    """
    Validate a decoded document and return the graph and its cycle, if any.

    Raises:
        InvalidGraphError: If the graph breaks its invariants.
    """
    if isinstance(document, MopFile):
        return build_mop(document.n, document.chords), None
    if isinstance(document, HtFile):
        return build_ht(document.n, document.inner, document.outer), None
    return SimpleGraph.from_edges(document.n, document.edges), document.cycle


def read_graph(data: Union[bytes, str]) -> AnyGraph:
    """Decode and validate a graph document, dropping any cycle."""
    return to_graph(decode_file(data))[0]


def to_file(graph: AnyGraph) -> AnyGraphFile:
    """Return the file document of a graph."""
    if isinstance(graph, MopGraph):
        return MopFile(graph.n, list(graph.chords))
    if isinstance(graph, HamTriangulation):
        return HtFile(graph.n, list(graph.inner), list(graph.outer))
    return GraphFile(graph.n, list(graph.edges))


def encode_graph(graph: AnyGraph) -> bytes:
    """Return a graph as one JSON document."""
    return msgspec.json.encode(to_file(graph))


def iter_jsonl(lines: Iterable[Union[bytes, str]]) -> Iterator[AnyGraph]:
    """
    Yield the graphs of a JSONL corpus, skipping blank lines.

    Raises:
        InvalidInputError: If a line cannot be decoded; the line number is named.
    """
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield read_graph(line)
        except (InvalidInputError, InvalidGraphError) as exc:
            msg = f"line {number}: {exc}"
            raise InvalidInputError(msg) from exc


def encode_jsonl(graphs: Iterable[AnyGraph]) -> Iterator[bytes]:
    """Yield one encoded line per graph."""
    for graph in graphs:
        yield encode_graph(graph) + b"\n"

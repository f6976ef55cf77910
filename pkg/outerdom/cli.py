"""Command-line interface."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import msgspec

from outerdom.bounds import bounds_report
from outerdom.config import OuterdomConfig
from outerdom.domination import SimpleGraph, gamma_exact_bb, gamma_mop_dp
from outerdom.dot import to_dot
from outerdom.exceptions import (
    BoundViolatedError,
    CertificateError,
    InvalidInputError,
    OuterdomError,
)
from outerdom.formats import (
    AnyGraph,
    decode_file,
    encode_jsonl,
    iter_jsonl,
    to_file,
    to_graph,
)
from outerdom.generators import (
    NAMED_GRAPHS,
    CorpusKind,
    CorpusMode,
    CorpusSpec,
    enumerate_hts,
    enumerate_mops,
    iter_corpus,
    named_graph,
)
from outerdom.hamiltonian import (
    HamTriangulation,
    PipelineReport,
    dominate_triangulation,
    embed_with_cycle,
    find_good_cycle,
    full_graph,
)
from outerdom.mop import MopGraph
from outerdom.reductions import ReductionTrace, dominate_mop, verify_trace
from outerdom.value_objects import OutputFormat, SearchTarget, Suite
from outerdom.verify import (
    Graph,
    run_default_suite,
    run_suite,
    search_counterexamples,
)
from outerdom.version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class Outcome(msgspec.Struct):
    """What a subcommand produced."""

    payload: Any
    exit_code: int = EXIT_OK
    text: Optional[str] = None
    graph: Optional[Any] = None


def _read_input(path: Optional[str]) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        msg = f"cannot read {path}: {exc}"
        raise InvalidInputError(msg) from exc


def _read_graph(args: argparse.Namespace) -> AnyGraph:
    graph, cycle = to_graph(decode_file(_read_input(args.input)))
    if isinstance(graph, SimpleGraph) and cycle is not None:
        return embed_with_cycle(graph, cycle)
    return graph


def _read_corpus(args: argparse.Namespace) -> List[AnyGraph]:
    return list(iter_jsonl(_read_input(args.input).splitlines()))


def _require_mop(graph: AnyGraph) -> MopGraph:
    if not isinstance(graph, MopGraph):
        msg = "this command needs a maximal outerplane graph"
        raise InvalidInputError(msg)
    return graph


def _config(args: argparse.Namespace) -> OuterdomConfig:
    overrides = {
        "workers": getattr(args, "workers", None),
        "seed": args.seed,
        "limit_bb": args.limit_bb,
        "debug": args.debug or None,
    }
    return OuterdomConfig(**{k: v for k, v in overrides.items() if v is not None})


def cmd_gamma(args: argparse.Namespace, config: OuterdomConfig) -> Outcome:
    """Compute the exact domination number of a graph file."""
    graph = _read_graph(args)
    if isinstance(graph, MopGraph):
        return Outcome(gamma_mop_dp(graph))
    if isinstance(graph, HamTriangulation):
        graph = full_graph(graph)
    return Outcome(gamma_exact_bb(graph, limit=config.limit_bb))


def cmd_bounds(
    args: argparse.Namespace,
    config: OuterdomConfig,  # noqa: ARG001
) -> Outcome:
    """Report the degree-2 structure and every bound of a MOP."""
    report = bounds_report(_require_mop(_read_graph(args)), with_gamma=True)
    payload = msgspec.to_builtins(report)
    payload["li_violated"] = report.li_violated
    return Outcome(payload)


def cmd_dominate(
    args: argparse.Namespace,
    config: OuterdomConfig,  # noqa: ARG001
) -> Outcome:
    """Dominate a MOP by reductions and print the trace."""
    return Outcome(dominate_mop(_require_mop(_read_graph(args))))


def cmd_verify_trace(
    args: argparse.Namespace,
    config: OuterdomConfig,  # noqa: ARG001
) -> Outcome:
    """Replay a reduction trace."""
    try:
        trace = msgspec.json.decode(_read_input(args.input), type=ReductionTrace)
    except msgspec.DecodeError as exc:
        msg = f"cannot decode trace: {exc}"
        raise InvalidInputError(msg) from exc
    problems = verify_trace(trace)
    return Outcome(
        {"ok": not problems, "problems": problems},
        EXIT_VIOLATION if problems else EXIT_OK,
    )


def cmd_pipeline(args: argparse.Namespace, config: OuterdomConfig) -> Outcome:
    """Dominate a Hamiltonian triangulation."""
    graph = _read_graph(args)
    if isinstance(graph, SimpleGraph):
        graph = find_good_cycle(graph, limit=config.limit_hamilton)
    if not isinstance(graph, HamTriangulation):
        msg = "this command needs a triangulation"
        raise InvalidInputError(msg)
    try:
        _, report = dominate_triangulation(
            graph, limit_bb=config.limit_bb, banded_k=config.banded_k
        )
    except BoundViolatedError as exc:
        if not isinstance(exc.payload, PipelineReport):
            raise
        sys.stderr.write(f"outerdom: {exc}\n")
        return Outcome(exc.payload, EXIT_VIOLATION)
    return Outcome(report)


def cmd_enumerate(args: argparse.Namespace, config: OuterdomConfig) -> Outcome:
    """Print every MOP or triangulation on n labelled vertices as JSONL."""
    if args.n is None:
        msg = "enumerate needs --n"
        raise InvalidInputError(msg)
    if args.kind is CorpusKind.MOP:
        graphs: Any = enumerate_mops(args.n, limit=config.limit_enumerate)
    else:
        graphs = enumerate_hts(args.n, limit=config.limit_enumerate_ht)
    lines = b"".join(encode_jsonl(graphs)).decode()
    return Outcome(None, text=lines)


def cmd_verify(args: argparse.Namespace, config: OuterdomConfig) -> Outcome:
    """Run an acceptance suite."""
    if args.input is not None:
        graphs = [g for g in _read_corpus(args) if not isinstance(g, SimpleGraph)]
        report = run_suite(args.suite, graphs, config)
    else:
        report = run_default_suite(
            args.suite, config, n_max=args.n_max, total=args.count
        )
    return Outcome(report, EXIT_OK if report.ok else EXIT_VIOLATION)


SEARCH_KINDS: Dict[SearchTarget, Tuple[CorpusKind, type]] = {
    SearchTarget.LI: (CorpusKind.MOP, MopGraph),
    SearchTarget.MATHESON_TARJAN: (CorpusKind.HAM_TRIANGULATION, HamTriangulation),
}


def cmd_search(args: argparse.Namespace, config: OuterdomConfig) -> Outcome:
    """Search for MOPs above (n + k) / 4 or triangulations above n / 4."""
    kind, graph_type = SEARCH_KINDS[args.target]
    if args.input is not None:
        graphs: List[Graph] = [
            g
            for g in _read_corpus(args)
            if not isinstance(g, SimpleGraph) and isinstance(g, graph_type)
        ]
    elif args.n is not None:
        mode = CorpusMode.RANDOM if args.count else CorpusMode.EXHAUSTIVE
        spec = CorpusSpec(kind, args.n, args.n, mode, config.seed, args.count)
        limit = (
            config.limit_enumerate
            if kind is CorpusKind.MOP
            else config.limit_enumerate_ht
        )
        graphs = list(iter_corpus(spec, limit=limit))
    else:
        msg = "search-counterexamples needs --n or --in"
        raise InvalidInputError(msg)
    found = search_counterexamples(graphs, args.target, config)
    payload = {
        "target": args.target,
        "searched": len(graphs),
        "found": len(found),
        "graphs": [to_file(graph) for graph in found],
    }
    return Outcome(payload, EXIT_VIOLATION if found else EXIT_OK)


def cmd_named(
    args: argparse.Namespace,
    config: OuterdomConfig,  # noqa: ARG001
) -> Outcome:
    """Print a named graph."""
    graph = named_graph(args.name)
    return Outcome(to_file(graph), graph=graph)


def cmd_export_dot(
    args: argparse.Namespace,
    config: OuterdomConfig,  # noqa: ARG001
) -> Outcome:
    """Print the DOT diagram of a MOP or a triangulation."""
    graph = _read_graph(args)
    if isinstance(graph, SimpleGraph):
        msg = "export-dot needs a maximal outerplane graph or a triangulation"
        raise InvalidInputError(msg)
    marked = gamma_mop_dp(graph).vertices if isinstance(graph, MopGraph) else ()
    return Outcome(None, text=to_dot(graph, marked))


COMMANDS: Dict[str, Callable[[argparse.Namespace, OuterdomConfig], Outcome]] = {
    "gamma": cmd_gamma,
    "bounds": cmd_bounds,
    "dominate": cmd_dominate,
    "verify-trace": cmd_verify_trace,
    "pipeline": cmd_pipeline,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "search-counterexamples": cmd_search,
    "named": cmd_named,
    "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input file, '-' for stdin")
    common.add_argument("--out", dest="output", help="output file (default stdout)")
    common.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.JSON,
    )
    common.add_argument("--seed", type=int)
    common.add_argument("--limit-bb", type=int, help="branch-and-bound vertex cap")
    common.add_argument("--debug", action="store_true")

    parser = argparse.ArgumentParser(prog="outerdom", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)
    for name, handler in COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=handler.__doc__)
        if name in {"verify", "search-counterexamples"}:
            sub.add_argument("--workers", type=int, help="worker processes")
            sub.add_argument(
                "--count", type=int, default=0, help="number of random graphs to use"
            )
        if name in {"enumerate", "search-counterexamples"}:
            sub.add_argument("--n", type=int)
        if name == "search-counterexamples":
            sub.add_argument(
                "--target",
                type=SearchTarget,
                choices=list(SearchTarget),
                default=SearchTarget.LI,
            )
        if name == "enumerate":
            sub.add_argument(
                "--kind",
                type=CorpusKind,
                choices=list(CorpusKind),
                default=CorpusKind.MOP,
            )
        if name == "verify":
            sub.add_argument("--suite", type=Suite, choices=list(Suite), required=True)
            sub.add_argument("--n-max", type=int)
        if name == "named":
            sub.add_argument("name", choices=sorted(NAMED_GRAPHS))
    return parser


def _table(payload: Any) -> str:
    builtins = msgspec.to_builtins(payload)
    if not isinstance(builtins, dict):
        return f"{builtins}\n"
    width = max((len(key) for key in builtins), default=0)
    return "".join(f"{key:<{width}}  {value}\n" for key, value in builtins.items())


def render(outcome: Outcome, output_format: OutputFormat) -> str:
    """Return the text to print for an outcome."""
    if outcome.text is not None:
        return outcome.text
    if output_format is OutputFormat.TABLE:
        return _table(outcome.payload)
    if output_format is OutputFormat.DOT:
        if isinstance(outcome.graph, (MopGraph, HamTriangulation)):
            return to_dot(outcome.graph)
        msg = "dot output is only available for graphs"
        raise InvalidInputError(msg)
    return msgspec.json.encode(outcome.payload).decode() + "\n"


def _write(text: str, path: Optional[str], stdout: TextIO) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text)


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run the command line and return the exit code."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
    except (TypeError, ValueError) as exc:
        sys.stderr.write(f"outerdom: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if config.debug else logging.WARNING)
    try:
        outcome = COMMANDS[args.command](args, config)
        _write(render(outcome, args.format), args.output, stdout)
    except (BoundViolatedError, CertificateError) as exc:
        sys.stderr.write(f"outerdom: {exc}\n")
        return EXIT_VIOLATION
    except OuterdomError as exc:
        sys.stderr.write(f"outerdom: {exc}\n")
        return EXIT_USAGE
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())

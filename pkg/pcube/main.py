"""
Command-line entry point for pcube.

Subcommands: analyze, generate, census, verify, dot. JSON goes to stdout,
logs to stderr. Exit codes: 0 clean, 1 theorem violations, 2 input errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Iterable, Iterator

from pcube.codecs.dot import graph_to_dot, zone_graph_to_dot
from pcube.codecs.graph6 import parse_graph6, write_graph6
from pcube.core.config import Settings, settings
from pcube.core.exceptions import (
    ClassIndexError,
    Graph6FormatError,
    GraphSizeError,
    NotPartialCubeError,
)
from pcube.generators import (
    cartesian_product,
    complete_bipartite,
    even_cycle,
    from_factor_spec,
    hypercube,
    middle_levels,
    path_graph,
    star_graph,
    x_graph,
)
from pcube.models.graph import Graph
from pcube.services.census_service import CensusService, write_csv
from pcube.services.report_service import ReportService
from pcube.services.theta_service import ThetaService
from pcube.services.zone_service import ZoneService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (
    Graph6FormatError,
    GraphSizeError,
    NotPartialCubeError,
    ClassIndexError,
    ValueError,
    OSError,
)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_graph(source: str) -> Graph:
    """A graph6 string, or the first non-blank stdin line for '-'."""
    if source != "-":
        return parse_graph6(source)
    for line in sys.stdin:
        if line.strip():
            return parse_graph6(line)
    raise Graph6FormatError("no graph on standard input")


def _decoded(lines: Iterable[bytes | str]) -> Iterator[str]:
    """Undecodable bytes become U+FFFD so the line fails graph6 parsing on its own."""
    for line in lines:
        yield line.decode("ascii", errors="replace") if isinstance(line, bytes) else line


def _input_lines(paths: list[str]) -> Iterator[str]:
    if not paths:
        paths = ["-"]
    for path in paths:
        if path == "-":
            yield from _decoded(getattr(sys.stdin, "buffer", sys.stdin))
        else:
            with open(path, "rb") as handle:
                yield from _decoded(handle)


# -- subcommands --------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace, config: Settings) -> int:
    report = ReportService(config).analyze(_read_graph(args.graph))
    _emit(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, config: Settings) -> int:
    builders: dict[str, Callable[[argparse.Namespace], Graph]] = {
        "hypercube": lambda a: hypercube(a.d),
        "cycle": lambda a: even_cycle(a.k),
        "middle-levels": lambda a: middle_levels(a.t),
        "product": lambda a: cartesian_product(from_factor_spec(a.g), from_factor_spec(a.h)),
        "x-graph": lambda a: x_graph(),
        "path": lambda a: path_graph(a.n),
        "star": lambda a: star_graph(a.k),
        "complete-bipartite": lambda a: complete_bipartite(a.a, a.b),
    }
    _emit(write_graph6(builders[args.family](args)))
    return EXIT_OK


def _exit_code(has_violations: bool, has_input_errors: bool) -> int:
    if has_violations:
        return EXIT_VIOLATIONS
    if has_input_errors:
        return EXIT_INPUT_ERROR
    return EXIT_OK


def cmd_census(args: argparse.Namespace, config: Settings) -> int:
    service = CensusService(config)
    keep_rows = args.per_graph or args.csv is not None
    if args.source == "qd":
        report = service.run_qd(args.dim, args.max_n, keep_rows=keep_rows)
    else:
        source = ",".join(args.inputs) if args.inputs else "stdin"
        report = service.run(_input_lines(args.inputs), source=source, keep_rows=keep_rows)

    if args.csv is not None:
        with open(args.csv, "w", encoding="ascii", newline="") as handle:
            write_csv(report.per_graph or [], handle)
        logger.info(f"Wrote {len(report.per_graph or [])} rows to {args.csv}")
    if not args.per_graph:
        report.per_graph = None
    _emit(report.model_dump_json(indent=2))
    return _exit_code(report.has_violations, bool(report.input_errors))


def cmd_verify(args: argparse.Namespace, config: Settings) -> int:
    graph = _read_graph(args.graph)
    ThetaService(graph).require_partial_cube()
    report = CensusService(config).verify_paper([graph])
    _emit(report.model_dump_json(indent=2))
    return _exit_code(report.has_violations, False)


def cmd_dot(args: argparse.Namespace, config: Settings) -> int:
    graph = _read_graph(args.graph)
    if args.zone is None:
        _emit(graph_to_dot(graph))
    else:
        _emit(zone_graph_to_dot(ZoneService(graph).zone_graph(args.zone)))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Structure of partial cubes and a census of the girth theorems.",
    )
    parser.add_argument(
        "--version", action="version", version=f"{settings.app_name} {settings.version}"
    )
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr)")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Full structural report as JSON")
    analyze.add_argument("graph", help="graph6 string, or - for stdin")
    analyze.set_defaults(handler=cmd_analyze)

    generate = commands.add_parser("generate", help="Emit a named graph as graph6")
    families = generate.add_subparsers(dest="family", required=True)
    families.add_parser("hypercube").add_argument("d", type=int)
    families.add_parser("cycle", help="the even cycle C_2k").add_argument("k", type=int)
    families.add_parser("middle-levels", help="M_(2t+1)").add_argument("t", type=int)
    product = families.add_parser(
        "product",
        help="Cartesian product; factors are hypercube:D, cycle:K, middle-levels:T, path:N, x-graph or graph6",
    )
    product.add_argument("g")
    product.add_argument("h")
    families.add_parser("x-graph")
    families.add_parser("path").add_argument("n", type=int)
    families.add_parser("star").add_argument("k", type=int)
    bipartite = families.add_parser("complete-bipartite")
    bipartite.add_argument("a", type=int)
    bipartite.add_argument("b", type=int)
    generate.set_defaults(handler=cmd_generate)

    census = commands.add_parser("census", help="Check the theorems over a stream or Q_d")
    census.add_argument("inputs", nargs="*", help="graph6 files; stdin when omitted or -")
    census.add_argument("--source", choices=("file", "qd"), default="file")
    census.add_argument("--max-n", type=int, default=8, help="Vertex bound for --source qd")
    census.add_argument("--dim", type=int, default=3, help="Hypercube dimension for --source qd")
    census.add_argument("--workers", type=int, default=None)
    census.add_argument("--csv", default=None, help="Write per-graph rows to this CSV file")
    census.add_argument("--per-graph", action="store_true", help="Include per-graph rows in the JSON")
    census.add_argument("--max-theta-pairs", type=int, default=None)
    census.add_argument("--geodesic-samples", type=int, default=None)
    census.add_argument("--seed", type=int, default=None, help="Geodesic sampling seed")
    census.add_argument("--progress", action="store_true", help="Progress bar on stderr")
    census.set_defaults(handler=cmd_census)

    verify = commands.add_parser("verify", help="Run every check on one partial cube")
    verify.add_argument("graph", help="graph6 string, or - for stdin")
    verify.set_defaults(handler=cmd_verify)

    dot = commands.add_parser("dot", help="DOT export of the graph or one zone graph")
    dot.add_argument("graph", help="graph6 string, or - for stdin")
    dot.add_argument("--zone", type=int, default=None, help="Θ-class index")
    dot.set_defaults(handler=cmd_dot)
    return parser


def _config_from_args(args: argparse.Namespace) -> Settings:
    overrides: dict[str, Any] = {"log_level": args.log_level}
    for flag, field in (
        ("workers", "census_workers"),
        ("max_theta_pairs", "max_theta_pairs"),
        ("geodesic_samples", "geodesic_samples"),
        ("seed", "sample_seed"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field] = value
    if getattr(args, "progress", False):
        overrides["show_progress"] = True
    return settings.model_copy(update=overrides)


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT_ERROR

    config = _config_from_args(args)
    logging.basicConfig(
        level=getattr(logging, config.log_level.upper(), logging.WARNING),
        format=config.log_format,
        stream=sys.stderr,
    )
    try:
        return args.handler(args, config)
    except INPUT_ERRORS as exc:
        logger.error(f"{args.command}: {exc}")
        print(f"pcube {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()

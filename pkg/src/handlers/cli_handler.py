# src/handlers/cli_handler.py
"""Command-line handlers: analyze, verify, enumerate, closed-forms."""

import argparse
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Optional, Sequence

import structlog
from pydantic import ValidationError

from src.config import DEFAULT_ENUMERATION_CAP, get_settings
from src.enumeration.domain.services.enumerator import enumerate_labeled
from src.enumeration.domain.value_objects.graph_filter import GraphFilter
from src.enumeration.infrastructure.graph6_stream import stream_graph6
from src.graphs.infrastructure.codecs.edge_list import parse_edge_list
from src.graphs.infrastructure.codecs.graph6 import encode_graph6
from src.resistance.application.services.analysis_application_service import AnalysisApplicationService
from src.shared.application.dto.cli_config import CliConfig
from src.shared.infrastructure.logging.setup import setup_logging
from src.shared.infrastructure.monitoring.metrics import start_metrics_server
from src.utils.cli_decorators import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    CliResult,
    cli_handler,
    validate_config,
)
from src.verification.application.dto.record_dto import VerificationRecordDTO
from src.verification.application.services.verification_application_service import VerificationApplicationService
from src.verification.domain.services.suites import SUITE_ALIASES, SuiteName

logger = structlog.get_logger()


@contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as handle:
        yield handle


def _input_lines(path: Optional[str]) -> Iterator[str]:
    if path is None or path == "-":
        yield from sys.stdin
        return
    with open(path, "r", encoding="utf-8") as handle:
        yield from handle


def _emit(out: IO[str], line: str) -> None:
    out.write(line + "\n")
    out.flush()


# === COMMANDS ===

@cli_handler
@validate_config(CliConfig)
def cmd_analyze(args: argparse.Namespace, config: CliConfig) -> CliResult:
    """One JSON report per input graph."""
    service = AnalysisApplicationService(get_settings())
    if config.format == "edgelist":
        text = "".join(_input_lines(config.input))
        graphs = [parse_edge_list(text)] if text.strip() else []
    else:
        graphs = stream_graph6(_input_lines(config.input), strict=True)

    count = 0
    with _output(config.output) as out:
        for report in service.analyze_all(graphs):
            _emit(out, report.to_json())
            count += 1
    return CliResult(EXIT_OK, count)


@cli_handler
@validate_config(CliConfig)
def cmd_verify(args: argparse.Namespace, config: CliConfig) -> CliResult:
    """Records streamed as completed; exit 1 if any record carries a violation."""
    service = VerificationApplicationService(get_settings(), exact_only=config.exact_only, jobs=config.jobs)
    stream = None
    if config.input is not None:
        stream = stream_graph6(_input_lines(config.input), strict=config.strict)

    failed = 0
    count = 0
    with _output(config.output) as out:
        for record in service.iter_suite(config.n, config.suite, stream):
            _emit(out, VerificationRecordDTO.from_record(record).to_json())
            count += 1
            failed += not record.passed
    if failed:
        logger.warning("Verification found violations", failed_records=failed, records=count)
        return CliResult(EXIT_VIOLATION, count)
    return CliResult(EXIT_OK, count)


@cli_handler
@validate_config(CliConfig)
def cmd_enumerate(args: argparse.Namespace, config: CliConfig) -> CliResult:
    """graph6 lines of every labeled graph passing the filter, in bitmask order."""
    settings = get_settings()
    graph_filter = GraphFilter(config.filter)
    # all orders are checked against the cap before anything is written
    streams = [enumerate_labeled(n, graph_filter, settings.cap) for n in config.n]
    expensive = [n for n in config.n if n >= DEFAULT_ENUMERATION_CAP]
    if expensive:
        logger.warning("Labeled enumeration at these orders is very expensive", orders=expensive)
    count = 0
    with _output(config.output) as out:
        for graphs in streams:
            for graph in graphs:
                out.write(encode_graph6(graph) + "\n")
                count += 1
    logger.info("Enumeration finished", orders=config.n, graphs=count, filter=config.filter)
    return CliResult(EXIT_OK, count)


@cli_handler
@validate_config(CliConfig)
def cmd_closed_forms(args: argparse.Namespace, config: CliConfig) -> CliResult:
    service = AnalysisApplicationService(get_settings())
    documents = [service.closed_forms(n) for n in config.n]
    with _output(config.output) as out:
        for document in documents:
            _emit(out, document.to_json())
    return CliResult(EXIT_OK, len(documents))


# === PARSER ===

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohmcurve",
        description="Exact resistance distances, Kirchhoff indices and resistance curvature of small graphs.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="report on each input graph")
    analyze.add_argument("--input", help="input file (default: stdin)")
    analyze.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    analyze.add_argument("--output", help="output file (default: stdout)")
    analyze.set_defaults(handler=cmd_analyze)

    suites = [suite.value for suite in SuiteName] + list(SUITE_ALIASES)
    verify = commands.add_parser("verify", help="check the bounds over every graph of each order")
    verify.add_argument("--n", help="order N or range A..B")
    verify.add_argument("--suite", action="append", choices=suites, help="repeatable (default: all)")
    verify.add_argument("--exact-only", action="store_true", help="skip float screening")
    verify.add_argument("--jobs", type=int, help="worker processes")
    verify.add_argument("--input", help="graph6 stream to check instead of enumerating ('-' for stdin)")
    verify.add_argument("--strict", action="store_true", help="fail on malformed stream lines")
    verify.add_argument("--output", help="output file (default: stdout)")
    verify.set_defaults(handler=cmd_verify)

    enumerate_ = commands.add_parser("enumerate", help="list labeled graphs as graph6")
    enumerate_.add_argument("--n", required=True, help="order N or range A..B")
    enumerate_.add_argument("--filter", default="any", help="any, connected or two_connected")
    enumerate_.add_argument("--output", help="output file (default: stdout)")
    enumerate_.set_defaults(handler=cmd_enumerate)

    closed = commands.add_parser("closed-forms", help="closed forms of C_n and K_n")
    closed.add_argument("--n", required=True, help="order N or range A..B")
    closed.add_argument("--output", help="output file (default: stdout)")
    closed.set_defaults(handler=cmd_closed_forms)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"ohmcurve: error: invalid OHMCURVE_* settings: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(settings.log_level if args.verbose else "WARNING", settings.log_format)
    if settings.cap > DEFAULT_ENUMERATION_CAP:
        logger.warning("Enumeration cap raised above default, sweeps at this order are very expensive",
                       cap=settings.cap, default=DEFAULT_ENUMERATION_CAP)
    start_metrics_server(settings)
    return args.handler(args)

"""Command-line entry point.

Graphs travel as graph6 lines on standard input and output, so subcommands
compose in pipelines such as ``broom-turan construct ... | broom-turan detect ...``.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from typing import IO, Any

from . import __version__
from .config import Settings, load_settings, load_settings_file
from .const import OBJECTIVES, SCHEMA_VERSION
from .detect import find_broom
from .enumeration import enumerate_graphs
from .errors import BroomTuranError
from .families import BroomSpec, FamilyId, FamilyTag
from .graph import Graph, graph6_encode, read_graph6_lines
from .hypergraph import classify_rsets, dominant_common_neighborhood, has_berge_path
from .schemas import (
    DETECT_SCHEMA,
    NBRHOOD_SCHEMA,
    SEARCH_SCHEMA,
    VERIFY_SCHEMA,
    validate_document,
)
from .search import (
    ExtremalReport,
    TheoremVerdict,
    extremal_search,
    objective_value,
    verify_theorem,
)

_LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = (
    "objective",
    "n",
    "optimum",
    "predicted_value",
    "predicted_family",
    "agrees",
    "unique_and_matches",
    "optimizer_count",
)

_CLIQUE_FAMILIES = frozenset({FamilyTag.H, FamilyTag.HSTAR, FamilyTag.COMPLETE_SPLIT})


def _spec_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--ell", type=int, required=required, help="broom path length")
    parser.add_argument("--s", type=int, required=required, help="extra leaves at the center")


def _input_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "file", nargs="?", help="graph6 file, one graph per line (default: stdin)"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="broom-turan",
        description="Exact verification of Turan-type results for forbidden brooms.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )
    parser.add_argument("--config", metavar="FILE", help="JSON settings file")
    parser.add_argument("--threads", type=int, help="worker processes for search")
    parser.add_argument(
        "--progress", action="store_true", help="show a progress bar for sweeps"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="print a family member as graph6")
    construct.add_argument(
        "--family", required=True, choices=[tag.value for tag in FamilyTag]
    )
    construct.add_argument("--n", type=int, help="number of vertices")
    construct.add_argument("--k", type=int, help="clique size for H and Hstar")
    _spec_arguments(construct, required=False)
    construct.add_argument("-o", "--output", metavar="FILE", help="write to FILE")

    count = commands.add_parser("count", help="evaluate an objective per graph")
    count.add_argument("--what", required=True, choices=OBJECTIVES)
    count.add_argument("--r", type=int, required=True)
    _input_argument(count)

    detect = commands.add_parser("detect", help="test broom containment per graph")
    _spec_arguments(detect)
    detect.add_argument(
        "--witness", action="store_true", help="emit JSON lines with an embedding"
    )
    _input_argument(detect)

    enumerate_ = commands.add_parser("enumerate", help="list graphs up to isomorphism")
    enumerate_.add_argument("--n", type=int, required=True)
    _spec_arguments(enumerate_, required=False)
    enumerate_.add_argument("--connected", action="store_true")
    enumerate_.add_argument("--count-only", action="store_true")

    search = commands.add_parser("search", help="exact optimum for one n")
    _spec_arguments(search)
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--r", type=int, required=True)
    search.add_argument("--objective", required=True, choices=OBJECTIVES)
    search.add_argument("--format", choices=("json", "text"), default="json")

    verify = commands.add_parser("verify", help="sweep n against the prediction")
    _spec_arguments(verify)
    verify.add_argument("--r", type=int, required=True)
    verify.add_argument("--nmin", type=int, required=True)
    verify.add_argument("--nmax", type=int, required=True)
    verify.add_argument("--format", choices=("json", "csv", "text"), default="json")

    nbrhood = commands.add_parser("nbrhood", help="common-neighborhood classes per graph")
    nbrhood.add_argument("--r", type=int, required=True)
    _spec_arguments(nbrhood)
    _input_argument(nbrhood)

    return parser


def _setup_logging(verbosity: int, stream: IO[str]) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=stream,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _settings(args: argparse.Namespace) -> Settings:
    settings = load_settings_file(args.config) if args.config else load_settings()
    if args.threads is not None:
        settings = settings.replace(threads=args.threads)
    return settings


@contextmanager
def _graphs(path: str | None, stdin: IO[str]) -> Iterator[Iterator[Graph]]:
    if path is None:
        yield read_graph6_lines(stdin)
        return
    try:
        handle = open(path, encoding="ascii")
    except OSError as err:
        raise BroomTuranError(f"Cannot read {path}: {err.strerror}") from err
    with handle:
        yield read_graph6_lines(handle)


def _dump(document: dict[str, Any], **kwargs: Any) -> str:
    return json.dumps(document, **kwargs)


class _Runner:
    """Dispatches one parsed invocation to its subcommand."""

    def __init__(
        self,
        parser: argparse.ArgumentParser,
        args: argparse.Namespace,
        stdin: IO[str],
        stdout: IO[str],
    ) -> None:
        self.parser = parser
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.settings = _settings(args)

    def write(self, line: str) -> None:
        self.stdout.write(line + "\n")

    def spec(self) -> BroomSpec:
        return BroomSpec(self.args.ell, self.args.s)

    def optional_spec(self) -> BroomSpec | None:
        if self.args.ell is None and self.args.s is None:
            return None
        if self.args.ell is None or self.args.s is None:
            self.parser.error("arguments --ell and --s must be given together")
        return self.spec()

    def dispatch(self) -> None:
        handlers: dict[str, Callable[[], None]] = {
            "construct": self.construct,
            "count": self.count,
            "detect": self.detect,
            "enumerate": self.enumerate,
            "search": self.search,
            "verify": self.verify,
            "nbrhood": self.nbrhood,
        }
        handlers[self.args.command]()

    def construct(self) -> None:
        args = self.args
        tag = FamilyTag(args.family)
        if tag is FamilyTag.BROOM:
            spec = self.optional_spec()
            if spec is None:
                self.parser.error("argument --ell and --s: required for family broom")
            if args.n is not None:
                self.parser.error("argument --n: not allowed for family broom")
            if args.k is not None:
                self.parser.error("argument --k: not allowed for family broom")
            family = FamilyId(tag, spec.order, ell=spec.ell, s=spec.s)
        else:
            if args.n is None:
                self.parser.error(f"argument --n: required for family {tag.value}")
            if args.ell is not None or args.s is not None:
                self.parser.error(
                    f"argument --ell/--s: not allowed for family {tag.value}"
                )
            if tag in _CLIQUE_FAMILIES and args.k is None:
                self.parser.error(f"argument --k: required for family {tag.value}")
            if tag not in _CLIQUE_FAMILIES and args.k is not None:
                self.parser.error(f"argument --k: not allowed for family {tag.value}")
            family = FamilyId(tag, args.n, k=args.k)

        line = graph6_encode(family.build()).decode("ascii")
        _LOGGER.info("Constructed %s", family)
        if args.output is None:
            self.write(line)
            return
        try:
            with open(args.output, "w", encoding="ascii") as handle:
                handle.write(line + "\n")
        except OSError as err:
            raise BroomTuranError(f"Cannot write {args.output}: {err.strerror}") from err

    def count(self) -> None:
        with _graphs(self.args.file, self.stdin) as graphs:
            for graph in graphs:
                self.write(str(objective_value(graph, self.args.r, self.args.what)))

    def detect(self) -> None:
        spec = self.spec()
        with _graphs(self.args.file, self.stdin) as graphs:
            for graph in graphs:
                embedding = find_broom(graph, spec)
                if not self.args.witness:
                    self.write("1" if embedding is not None else "0")
                    continue
                document = {
                    "schema_version": SCHEMA_VERSION,
                    "graph6": str(graph),
                    "contains": embedding is not None,
                    "witness": embedding.as_dict() if embedding is not None else None,
                }
                self.write(_dump(validate_document(DETECT_SCHEMA, document)))

    def enumerate(self) -> None:
        spec = self.optional_spec()
        graphs = enumerate_graphs(
            self.args.n, spec, connected_only=self.args.connected, settings=self.settings
        )
        if self.args.count_only:
            self.write(str(sum(1 for _ in graphs)))
            return
        for graph in graphs:
            self.write(str(graph))

    def search(self) -> None:
        args = self.args
        report = extremal_search(self.spec(), args.n, args.r, args.objective, self.settings)
        if args.format == "text":
            for line in _report_lines(report):
                self.write(line)
            return
        document = {"schema_version": SCHEMA_VERSION, **report.as_dict()}
        self.write(_dump(validate_document(SEARCH_SCHEMA, document), indent=2))

    def verify(self) -> None:
        args = self.args
        verdict = verify_theorem(
            self.spec(),
            args.r,
            args.nmin,
            args.nmax,
            self.settings,
            progress=args.progress,
        )
        match args.format:
            case "csv":
                _write_csv(verdict, self.stdout)
            case "text":
                for line in _verdict_lines(verdict):
                    self.write(line)
            case _:
                document = {"schema_version": SCHEMA_VERSION, **verdict.as_dict()}
                self.write(_dump(validate_document(VERIFY_SCHEMA, document), indent=2))

    def nbrhood(self) -> None:
        spec = self.spec()
        r = self.args.r
        with _graphs(self.args.file, self.stdin) as graphs:
            for graph in graphs:
                classification = classify_rsets(graph, r, spec, self.settings)
                dominant = dominant_common_neighborhood(classification)
                document = {
                    "schema_version": SCHEMA_VERSION,
                    "graph6": str(graph),
                    "r": r,
                    "ell": spec.ell,
                    "s": spec.s,
                    "k": spec.k,
                    "sizes": classification.sizes,
                    "berge_path_k_plus_1": has_berge_path(classification.h2, spec.k + 1),
                    "dominant_k_set": dominant.as_dict() if dominant is not None else None,
                }
                self.write(_dump(validate_document(NBRHOOD_SCHEMA, document)))


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _report_lines(report: ExtremalReport) -> list[str]:
    return [
        f"{report.spec} n={report.n} r={report.r} objective={report.objective}",
        f"optimum: {report.optimum}",
        f"predicted: {report.predicted_value} ({report.predicted_family})",
        f"agrees: {_flag(report.agrees)}",
        f"unique_and_matches: {_flag(report.unique_and_matches)}",
        f"optimizers ({len(report.optimizers)}): {' '.join(report.optimizers)}",
    ]


def _verdict_lines(verdict: TheoremVerdict) -> list[str]:
    lines = [f"{verdict.spec} r={verdict.r} n={verdict.n_min}..{verdict.n_max}"]
    for objective, sweep in verdict.sweeps.items():
        threshold = sweep.threshold if sweep.threshold is not None else "none"
        lines.append(f"{objective}: threshold {threshold}")
        lines.extend(
            f"  n={report.n} optimum={report.optimum} "
            f"predicted={report.predicted_value} ({report.predicted_family}) "
            f"agrees={_flag(report.agrees)} "
            f"unique={_flag(report.unique_and_matches)} "
            f"optimizers={len(report.optimizers)}"
            for report in sweep.reports
        )
    return lines


def _write_csv(verdict: TheoremVerdict, stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for objective, sweep in verdict.sweeps.items():
        for report in sweep.reports:
            writer.writerow(
                (
                    objective,
                    report.n,
                    report.optimum,
                    report.predicted_value,
                    str(report.predicted_family),
                    str(report.agrees).lower(),
                    str(report.unique_and_matches).lower(),
                    len(report.optimizers),
                )
            )


def run(
    argv: Sequence[str] | None = None,
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    """Run one invocation and return its exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:]).
        stdin: Input stream for graph6 lines.
        stdout: Output stream for results.
        stderr: Stream for errors, usage messages and logs.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error.
    """
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    parser = build_parser()
    try:
        with redirect_stderr(stderr), redirect_stdout(stdout):
            args = parser.parse_args(argv)
            _setup_logging(args.verbose, stderr)
            _Runner(parser, args, stdin, stdout).dispatch()
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    except BroomTuranError as err:
        _LOGGER.debug("Command failed", exc_info=True)
        stderr.write(f"error: {err}\n")
        return 1
    return 0


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())

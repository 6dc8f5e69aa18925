"""
Command-line entry point: ``ckm``.

Sub-commands:
- ``analyze PATHS...``       parse sources, compute metrics, render a report
- ``generate``               write a seeded synthetic model document
- ``metrics-from-model FILE`` compute metrics for a model document (``-`` reads stdin)

Exit codes:
- 0: success
- 1: a threshold rule with severity ``fail`` was violated
- 2: usage or configuration error
- 3: the input had parse errors and no class could be recovered
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import BinaryIO, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from . import __version__
from .config import DEFAULT_CONFIG
from .config_helper import get_color_mode, use_color
from .errors import CkmError, ConfigError, InputPathError
from .generator import GenSpec, generate
from .models.class_model import ClassModel
from .models.document import export_model, import_model
from .models.report import AnalysisReport
from .parser import analyze_paths, discover_files
from .report import FORMATS, build_report, load_rules, render
from .utils.run_stats import RunStats

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL_VERDICT = 1
EXIT_USAGE = 2
EXIT_NO_CLASSES = 3

# one handler per process, replaced on every run
_LOG_HANDLER = "ckm-cli"


class _Streams:
    def __init__(self, stdin: Optional[BinaryIO], stdout: Optional[TextIO], stderr: Optional[TextIO]):
        self.stdin = stdin
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr

    def read_stdin(self) -> bytes:
        if self.stdin is not None:
            return self.stdin.read()
        return sys.stdin.buffer.read()

    def write_stdout(self, data: bytes) -> None:
        buffer = getattr(self.stdout, "buffer", None)
        if buffer is not None:
            self.stdout.flush()
            buffer.write(data)
            buffer.flush()
        else:
            self.stdout.write(data.decode("utf-8"))

    def error(self, message: str) -> None:
        print(f"ckm: error: {message}", file=self.stderr)


class _ArgumentParser(argparse.ArgumentParser):
    """Writes usage, help and errors to the run's streams rather than the process ones."""

    def __init__(self, *args, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.stdout = stdout
        self.stderr = stderr

    def _print_message(self, message: str, file: Optional[TextIO] = None) -> None:
        if not message:
            return
        if file is None or file is sys.stderr:
            file = self.stderr or sys.stderr
        elif file is sys.stdout:
            file = self.stdout or sys.stdout
        file.write(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _write_file(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise ConfigError(f"cannot write {path}: {e.strerror or e}") from e


def _emit(args: argparse.Namespace, data: bytes, streams: _Streams) -> None:
    if args.output and args.output != "-":
        _write_file(args.output, data)
        logger.info(f"Wrote {len(data)} bytes to {args.output}")
    else:
        streams.write_stdout(data)


def _render_report(args: argparse.Namespace, report: AnalysisReport, streams: _Streams) -> bytes:
    color = False
    if args.format == "table":
        if args.output and args.output != "-":
            color = get_color_mode() == "always"
        else:
            color = use_color(streams.stdout)
    return render(
        report,
        args.format,
        color=color,
        width=DEFAULT_CONFIG.report.table_width,
        lcom=DEFAULT_CONFIG.report.lcom_for_summary,
    )


def _report_exit_code(model: ClassModel, report: AnalysisReport, streams: _Streams) -> int:
    errors = [d for d in model.resolution_diagnostics if d.is_error]
    if errors and not model.internal_classes:
        streams.error(f"no classes recovered; {len(errors)} errors")
        for diagnostic in errors[:10]:
            print(f"  {diagnostic}", file=streams.stderr)
        return EXIT_NO_CLASSES
    if report.status == "fail":
        failing = sum(1 for v in report.verdicts if v.severity == "fail")
        print(f"ckm: {failing} threshold rule violations at severity fail", file=streams.stderr)
        return EXIT_FAIL_VERDICT
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace, streams: _Streams, stats: RunStats) -> int:
    rules = load_rules(args.rules) if args.rules else []

    with stats.stage("discover"):
        files = discover_files(args.paths, args.suffix)
    with stats.stage("parse"):
        model = analyze_paths(args.paths, args.suffix, args.jobs, files=files)
    stats.files = len(files)
    stats.classes = len(model.internal_classes)
    stats.diagnostics = len(model.resolution_diagnostics)

    if args.export_model:
        _write_file(args.export_model, export_model(model))
        logger.info(f"Exported model to {args.export_model}")

    with stats.stage("measure"):
        report = build_report(
            model,
            files=len(files),
            rules=rules,
            correlate_metrics=args.correlate,
            include_constructors=DEFAULT_CONFIG.metrics.include_constructors and not args.no_constructors,
        )
    with stats.stage("render"):
        output = _render_report(args, report, streams)
    _emit(args, output, streams)
    return _report_exit_code(model, report, streams)


def _cmd_metrics_from_model(args: argparse.Namespace, streams: _Streams, stats: RunStats) -> int:
    rules = load_rules(args.rules) if args.rules else []

    with stats.stage("import"):
        if args.model == "-":
            document = streams.read_stdin()
        else:
            try:
                document = Path(args.model).read_bytes()
            except FileNotFoundError:
                raise InputPathError(f"no such file: {args.model}")
            except OSError as e:
                raise InputPathError(f"cannot read {args.model}: {e.strerror or e}") from e
        model = import_model(document)
    stats.classes = len(model.internal_classes)

    with stats.stage("measure"):
        report = build_report(
            model,
            rules=rules,
            correlate_metrics=args.correlate,
            include_constructors=DEFAULT_CONFIG.metrics.include_constructors and not args.no_constructors,
        )
    with stats.stage("render"):
        output = _render_report(args, report, streams)
    _emit(args, output, streams)
    return _report_exit_code(model, report, streams)


def _cmd_generate(args: argparse.Namespace, streams: _Streams, stats: RunStats) -> int:
    try:
        spec = GenSpec(
            seed=args.seed,
            n_classes=args.classes,
            n_packages=args.packages,
            max_methods=args.max_methods,
            max_fields=args.max_fields,
            inheritance_prob=args.inheritance_prob,
            cross_class_call_prob=args.call_prob,
            attribute_sharing=args.sharing,
            intra_class_call_prob=args.intra_call_prob,
            coupling_mode=args.coupling_mode,
        )
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ConfigError(f"invalid generator setting {where}: {first['msg']}") from e

    with stats.stage("generate"):
        model = generate(spec)
        document = export_model(model)
    stats.classes = len(model.classes)

    if args.out == "-":
        streams.write_stdout(document)
    else:
        _write_file(args.out, document)
        logger.info(f"Wrote model document to {args.out}")
    return EXIT_OK


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=DEFAULT_CONFIG.report.format,
        help=f"Report format (default: {DEFAULT_CONFIG.report.format})",
    )
    parser.add_argument("--output", "-o", help="Write the report to FILE instead of standard output")
    parser.add_argument("--rules", help="YAML/JSON list of threshold rules")
    parser.add_argument(
        "--correlate",
        action="store_true",
        default=DEFAULT_CONFIG.report.correlate,
        help="Add Spearman correlations between metrics",
    )
    parser.add_argument(
        "--no-constructors",
        action="store_true",
        help="Leave constructors out of LCOM, RFC and method counts",
    )


def build_parser(stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="Log INFO (-v) or DEBUG (-vv) to standard error",
    )

    streams = {"stdout": stdout, "stderr": stderr}
    parser = _ArgumentParser(prog="ckm", description="Coupling and cohesion metrics for Java-like sources", **streams)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="Analyze source files and report metrics", **streams)
    analyze.add_argument("paths", nargs="+", help="Source files or directories")
    _add_report_options(analyze)
    analyze.add_argument("--export-model", metavar="FILE", help="Also write the built model document to FILE")
    analyze.add_argument(
        "--jobs", "-j",
        type=_positive_int,
        default=DEFAULT_CONFIG.parser.jobs,
        help="Worker processes for parsing (default: 1)",
    )
    analyze.add_argument(
        "--suffix",
        default=DEFAULT_CONFIG.parser.suffix,
        help=f"Source file suffix (default: {DEFAULT_CONFIG.parser.suffix})",
    )
    analyze.set_defaults(func=_cmd_analyze)

    gen = DEFAULT_CONFIG.generator
    generate_parser = sub.add_parser(
        "generate",
        parents=[common],
        help="Write a seeded synthetic model document",
        **streams,
    )
    generate_parser.add_argument("--seed", type=int, default=gen.seed)
    generate_parser.add_argument("--classes", type=int, default=gen.n_classes)
    generate_parser.add_argument("--packages", type=int, default=gen.n_packages)
    generate_parser.add_argument("--max-methods", type=int, default=gen.max_methods)
    generate_parser.add_argument("--max-fields", type=int, default=gen.max_fields)
    generate_parser.add_argument("--inheritance-prob", type=float, default=gen.inheritance_prob)
    generate_parser.add_argument("--call-prob", type=float, default=gen.cross_class_call_prob)
    generate_parser.add_argument("--sharing", type=float, default=gen.attribute_sharing)
    generate_parser.add_argument("--intra-call-prob", type=float, default=gen.intra_class_call_prob)
    generate_parser.add_argument(
        "--coupling-mode",
        choices=("independent", "inverse", "direct"),
        default=gen.coupling_mode,
    )
    generate_parser.add_argument("--out", default="-", help="Output file, or - for standard output (default)")
    generate_parser.set_defaults(func=_cmd_generate)

    from_model = sub.add_parser(
        "metrics-from-model",
        parents=[common],
        help="Compute metrics for a model document",
        **streams,
    )
    from_model.add_argument("model", help="Model document, or - to read standard input")
    _add_report_options(from_model)
    from_model.set_defaults(func=_cmd_metrics_from_model)

    return parser


def _configure_logging(verbosity: int, stderr: TextIO) -> None:
    level = DEFAULT_CONFIG.monitoring.log_level
    if verbosity == 1:
        level = "INFO"
    elif verbosity >= 2:
        level = "DEBUG"
    package_logger = logging.getLogger("ckmetrics")
    for handler in [h for h in package_logger.handlers if h.get_name() == _LOG_HANDLER]:
        package_logger.removeHandler(handler)
    handler = logging.StreamHandler(stderr)
    handler.set_name(_LOG_HANDLER)
    handler.setFormatter(logging.Formatter(DEFAULT_CONFIG.monitoring.log_format))
    package_logger.addHandler(handler)
    package_logger.setLevel(level)


def run(
    argv: Optional[Sequence[str]] = None,
    *,
    stdin: Optional[BinaryIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one ``ckm`` command and return its exit code. Never raises."""
    streams = _Streams(stdin, stdout, stderr)
    parser = build_parser(streams.stdout, streams.stderr)
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose, streams.stderr)
    stats = RunStats(command=args.command)
    try:
        code = args.func(args, streams, stats)
    except CkmError as e:
        streams.error(e.message)
        code = e.exit_code
    except Exception as e:
        logger.exception("Unexpected failure")
        streams.error(f"internal error: {e}")
        code = EXIT_USAGE
    stats.finish(code)
    return code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

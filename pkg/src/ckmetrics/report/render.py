"""
Render an AnalysisReport as JSON, CSV or an aligned text table.

All three formats are deterministic: equal reports give equal bytes. The
table is laid out at a fixed width and only carries ANSI colour when asked.
"""

import csv
import io
import json
import logging

from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..errors import ConfigError
from ..models.metrics import COUPLING_METRICS, METRIC_NAMES
from ..models.report import AnalysisReport

logger = logging.getLogger(__name__)

FORMATS = ("table", "json", "csv")
CSV_HEADER = ("class",) + METRIC_NAMES

SEVERITY_STYLES = {"fail": "bold red", "warn": "yellow", "pass": "green"}


def render_json(report: AnalysisReport) -> bytes:
    document = report.model_dump(by_alias=True, mode="json")
    return (json.dumps(document, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def render_csv(report: AnalysisReport) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow([row.class_fqn] + [row.metric(name) for name in METRIC_NAMES])
    return buffer.getvalue().encode("utf-8")


def _rho(value) -> str:
    return "n/a" if value is None else f"{value:+.3f}"


def _metrics_table(report: AnalysisReport) -> Table:
    table = Table(title="Class metrics", box=box.SIMPLE, title_justify="left")
    table.add_column("class", justify="left", overflow="fold")
    for name in METRIC_NAMES:
        table.add_column(name, justify="right")
    for row in report.rows:
        table.add_row(row.class_fqn, *(str(row.metric(name)) for name in METRIC_NAMES))
    return table


def _package_table(report: AnalysisReport, lcom: str) -> Table:
    table = Table(title="Packages", box=box.SIMPLE, title_justify="left")
    table.add_column("package", justify="left", overflow="fold")
    for heading in ("classes", "ce", "ca", "instability", "cbo mean", f"{lcom} mean", f"{lcom} max"):
        table.add_column(heading, justify="right")
    for package, rollup in report.package_rollups.items():
        instability = "-" if rollup.instability is None else f"{rollup.instability:.2f}"
        table.add_row(
            package,
            str(rollup.classes),
            str(rollup.ce),
            str(rollup.ca),
            instability,
            f"{rollup.metrics['cbo'].mean:.2f}",
            f"{rollup.metrics[lcom].mean:.2f}",
            str(rollup.metrics[lcom].max),
        )
    return table


def _correlation_table(report: AnalysisReport, lcom: str) -> Table:
    table = Table(title=f"Cohesion vs coupling (Spearman rho against {lcom})", box=box.SIMPLE, title_justify="left")
    table.add_column("metric", justify="left")
    table.add_column("rho", justify="right")
    table.add_column("n", justify="right")
    summary = report.correlations.cohesion_coupling(lcom)
    for metric in COUPLING_METRICS:
        table.add_row(metric, _rho(summary[metric]), str(report.correlations.get(lcom, metric).n))
    return table


def _verdict_table(report: AnalysisReport) -> Table:
    table = Table(title="Threshold verdicts", box=box.SIMPLE, title_justify="left")
    table.add_column("class", justify="left", overflow="fold")
    table.add_column("rule", justify="left")
    table.add_column("actual", justify="right")
    table.add_column("severity", justify="left")
    for verdict in report.verdicts:
        table.add_row(
            verdict.class_fqn,
            verdict.rule.describe(),
            str(verdict.actual),
            verdict.severity,
            style=SEVERITY_STYLES[verdict.severity],
        )
    return table


def render_table(report: AnalysisReport, *, color: bool = False, width: int = 120, lcom: str = "lcom2") -> bytes:
    buffer = io.StringIO()
    console = Console(
        file=buffer,
        width=width,
        force_terminal=color,
        color_system="standard" if color else None,
        markup=False,
        highlight=False,
        emoji=False,
        legacy_windows=False,
    )

    console.print(_metrics_table(report))
    if report.package_rollups:
        console.print(_package_table(report, lcom))
    if report.correlations is not None:
        console.print(_correlation_table(report, lcom))
    if report.verdicts:
        console.print(_verdict_table(report))

    errors = sum(1 for d in report.diagnostics if d.is_error)
    warnings = len(report.diagnostics) - errors
    source = report.generated_from
    console.print(Text.assemble(
        f"{source.classes} classes in {source.packages} packages from {source.files} files; "
        f"{errors} errors, {warnings} warnings; status: ",
        (report.status, SEVERITY_STYLES[report.status]),
    ))
    return buffer.getvalue().encode("utf-8")


def render(
    report: AnalysisReport,
    format: str = "table",
    *,
    color: bool = False,
    width: int = 120,
    lcom: str = "lcom2",
) -> bytes:
    """
    Render ``report`` in one of ``table``, ``json`` or ``csv``.

    ``color`` and ``width`` only affect the table; ``lcom`` picks the
    cohesion column the table summarises coupling against.

    Raises:
        ConfigError: unknown format or LCOM column.
    """
    if format not in FORMATS:
        raise ConfigError(f"unknown format '{format}'; expected one of {', '.join(FORMATS)}")
    if lcom not in METRIC_NAMES or not lcom.startswith("lcom"):
        raise ConfigError(f"unknown LCOM column '{lcom}'")

    if format == "json":
        output = render_json(report)
    elif format == "csv":
        output = render_csv(report)
    else:
        output = render_table(report, color=color, width=width, lcom=lcom)
    logger.info(f"Rendered {format} report ({len(output)} bytes)")
    return output

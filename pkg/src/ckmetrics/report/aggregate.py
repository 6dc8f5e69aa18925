"""
Assemble an AnalysisReport from a model and its metric rows.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..metrics import compute_all, package_coupling
from ..models.class_model import ClassModel, package_label
from ..models.metrics import METRIC_NAMES, MetricsRow
from ..models.report import AnalysisReport, MetricSummary, PackageRollup, SourceSummary
from .correlation import correlate
from .thresholds import RuleLike, evaluate_thresholds

logger = logging.getLogger(__name__)


def summarize(values: Sequence[int]) -> MetricSummary:
    """Mean, median and max of one metric column."""
    if not values:
        return MetricSummary(mean=0.0, median=0.0, max=0)
    column = np.asarray(values, dtype=float)
    return MetricSummary(mean=float(np.mean(column)), median=float(np.median(column)), max=int(max(values)))


def package_rollups(model: ClassModel, rows: Sequence[MetricsRow]) -> Dict[str, PackageRollup]:
    """Per-package coupling and metric summaries, keyed by package label in sorted order."""
    by_class = {row.class_fqn: row for row in rows}
    rollups = {}
    for package in model.packages:
        members = [by_class[c.fqn] for c in model.internal_classes if c.package == package and c.fqn in by_class]
        ce, ca = package_coupling(model, package)
        total = ce + ca
        rollups[package_label(package)] = PackageRollup(
            classes=len(members),
            ce=ce,
            ca=ca,
            instability=ce / total if total else None,
            metrics={name: summarize([row.metric(name) for row in members]) for name in METRIC_NAMES},
        )
    return dict(sorted(rollups.items()))


def build_report(
    model: ClassModel,
    rows: Optional[List[MetricsRow]] = None,
    *,
    files: int = 0,
    rules: Iterable[RuleLike] = (),
    correlate_metrics: bool = False,
    include_constructors: bool = True,
) -> AnalysisReport:
    """
    Build the full report for ``model``.

    ``rows`` may be passed when metrics were already computed. Correlations
    are only computed when requested and at least two rows exist.

    Raises:
        AnalysisError: the inheritance graph has a cycle.
        ConfigError: a rule is invalid.
    """
    if rows is None:
        rows = compute_all(model, include_constructors=include_constructors)

    verdicts = evaluate_thresholds(rows, rules)
    correlations = correlate(rows) if correlate_metrics and len(rows) >= 2 else None
    if correlate_metrics and correlations is None:
        logger.warning(f"Correlations skipped: {len(rows)} classes, at least 2 needed")

    report = AnalysisReport(
        generated_from=SourceSummary(files=files, classes=len(rows), packages=len(model.packages)),
        rows=rows,
        package_rollups=package_rollups(model, rows),
        correlations=correlations,
        verdicts=verdicts,
        diagnostics=list(model.resolution_diagnostics),
    )
    logger.info(f"Report built: {len(rows)} rows, {len(verdicts)} verdicts, status {report.status}")
    return report

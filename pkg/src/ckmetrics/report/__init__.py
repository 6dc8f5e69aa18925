"""
Corpus reports: package rollups, cohesion/coupling rank correlations,
threshold verdicts and rendering.
"""

from .aggregate import build_report, package_rollups, summarize
from .correlation import correlate, spearman
from .render import CSV_HEADER, FORMATS, render
from .thresholds import coerce_rules, evaluate_thresholds, load_rules

__all__ = [
    "build_report",
    "package_rollups",
    "summarize",
    "correlate",
    "spearman",
    "CSV_HEADER",
    "FORMATS",
    "render",
    "coerce_rules",
    "evaluate_thresholds",
    "load_rules",
]

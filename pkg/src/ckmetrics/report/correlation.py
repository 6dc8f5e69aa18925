"""
Spearman rank correlation between metric columns.

Ranks are averaged over ties (``scipy.stats.rankdata``) and the coefficient
is the Pearson correlation of the ranks. A series whose ranks do not vary
has no defined coefficient; that is reported as ``None``, never as 0.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np
from scipy.stats import rankdata

from ..errors import ArgumentError, InsufficientDataError
from ..models.metrics import METRIC_NAMES, MetricsRow
from ..models.report import CorrelationEntry, CorrelationMatrix

logger = logging.getLogger(__name__)


def spearman(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    """
    Spearman rho of two equal-length series, or None when undefined.

    Raises:
        ArgumentError: lengths differ or fewer than two observations.
    """
    if len(xs) != len(ys):
        raise ArgumentError(f"series lengths differ: {len(xs)} != {len(ys)}")
    if len(xs) < 2:
        raise ArgumentError(f"spearman needs at least 2 observations, got {len(xs)}")

    rx = rankdata(np.asarray(xs, dtype=float), method="average")
    ry = rankdata(np.asarray(ys, dtype=float), method="average")
    dx = rx - rx.mean()
    dy = ry - ry.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return None
    rho = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, rho))


def correlate(rows: Sequence[MetricsRow]) -> CorrelationMatrix:
    """
    Pairwise Spearman rho over all nine metric columns.

    The matrix is symmetric; each cell is computed once and mirrored.

    Raises:
        InsufficientDataError: fewer than two rows.
    """
    if len(rows) < 2:
        raise InsufficientDataError(f"correlation needs at least 2 classes, got {len(rows)}")

    columns = {name: [row.metric(name) for row in rows] for name in METRIC_NAMES}
    n = len(rows)
    cells = {name: {} for name in METRIC_NAMES}
    for i, a in enumerate(METRIC_NAMES):
        for b in METRIC_NAMES[i:]:
            entry = CorrelationEntry(rho=spearman(columns[a], columns[b]), n=n)
            cells[a][b] = entry
            cells[b][a] = entry

    matrix = CorrelationMatrix({a: {b: cells[a][b] for b in METRIC_NAMES} for a in METRIC_NAMES})
    logger.info(f"Correlated {len(METRIC_NAMES)} metrics over {n} classes")
    return matrix

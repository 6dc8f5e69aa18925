"""
Report models: threshold rules and verdicts, correlations, package rollups
and the corpus-level AnalysisReport.
"""

import math
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator

from .class_model import Diagnostic
from .metrics import COUPLING_METRICS, METRIC_NAMES, MetricsRow

Comparator = Literal[">", ">=", "<", "<="]


class ThresholdRule(BaseModel):
    """A gate on one metric column, e.g. ``lcom2 > 10`` at severity ``fail``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    metric: str
    comparator: Comparator = Field(..., alias="op")
    limit: float
    severity: Literal["warn", "fail"] = "warn"

    @field_validator("metric")
    @classmethod
    def _known_metric(cls, value: str) -> str:
        if value not in METRIC_NAMES:
            raise ValueError(f"unknown metric '{value}'; expected one of {', '.join(METRIC_NAMES)}")
        return value

    @field_validator("limit")
    @classmethod
    def _finite_limit(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("limit must be finite")
        return value

    def violated_by(self, actual: float) -> bool:
        if self.comparator == ">":
            return actual > self.limit
        if self.comparator == ">=":
            return actual >= self.limit
        if self.comparator == "<":
            return actual < self.limit
        return actual <= self.limit

    def describe(self) -> str:
        limit = int(self.limit) if float(self.limit).is_integer() else self.limit
        return f"{self.metric} {self.comparator} {limit}"


class Verdict(BaseModel):
    """One rule triggered by one class."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    class_fqn: str = Field(..., alias="class")
    rule: ThresholdRule
    actual: int
    severity: Literal["warn", "fail"]


class CorrelationEntry(BaseModel):
    """Spearman rho for a pair of metric columns; ``rho`` is None when undefined."""

    model_config = ConfigDict(frozen=True)

    rho: Optional[float] = Field(None, ge=-1.0, le=1.0)
    n: int = Field(..., ge=0)


class CorrelationMatrix(RootModel[Dict[str, Dict[str, CorrelationEntry]]]):
    """Pairwise rank correlations, nested as ``matrix[a][b]``."""

    model_config = ConfigDict(frozen=True)

    root: Dict[str, Dict[str, CorrelationEntry]] = Field(default_factory=dict)

    def get(self, a: str, b: str) -> CorrelationEntry:
        return self.root[a][b]

    def rho(self, a: str, b: str) -> Optional[float]:
        return self.root[a][b].rho

    @property
    def metrics(self) -> List[str]:
        return list(self.root)

    def cohesion_coupling(self, lcom: str = "lcom2") -> Dict[str, Optional[float]]:
        """Rho of every coupling metric against one LCOM column."""
        return {metric: self.rho(lcom, metric) for metric in COUPLING_METRICS}


class MetricSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    median: float
    max: int


class PackageRollup(BaseModel):
    """Package-level coupling plus per-metric summaries over the package's classes."""

    model_config = ConfigDict(frozen=True)

    classes: int
    ce: int
    ca: int
    instability: Optional[float] = Field(None, description="ce / (ce + ca); null when both are 0")
    metrics: Dict[str, MetricSummary] = Field(default_factory=dict)


class SourceSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    files: int = 0
    classes: int = 0
    packages: int = 0


class AnalysisReport(BaseModel):
    """Everything one analysis run produces."""

    model_config = ConfigDict(frozen=True)

    version: int = 1
    generated_from: SourceSummary = Field(default_factory=SourceSummary)
    rows: List[MetricsRow] = Field(default_factory=list)
    package_rollups: Dict[str, PackageRollup] = Field(default_factory=dict)
    correlations: Optional[CorrelationMatrix] = None
    verdicts: List[Verdict] = Field(default_factory=list)
    diagnostics: List[Diagnostic] = Field(default_factory=list)

    @property
    def status(self) -> Literal["pass", "warn", "fail"]:
        severities = {v.severity for v in self.verdicts}
        if "fail" in severities:
            return "fail"
        if "warn" in severities:
            return "warn"
        return "pass"

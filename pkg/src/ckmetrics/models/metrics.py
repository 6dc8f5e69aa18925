"""
Metric result models: the per-class metric vector and dependency edges.
"""

from typing import FrozenSet, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field

METRIC_NAMES: Tuple[str, ...] = (
    "ce", "ca", "dit", "cbo", "rfc", "lcom1", "lcom2", "lcom3", "lcom4",
)

COUPLING_METRICS: Tuple[str, ...] = ("ce", "ca", "dit", "cbo", "rfc")
COHESION_METRICS: Tuple[str, ...] = ("lcom1", "lcom2", "lcom3", "lcom4")

DependencyReason = Literal["field-type", "param-type", "return-type", "call", "parent"]


class DependencyEdge(BaseModel):
    """A directed dependency between two distinct classes, with every reason it exists."""

    model_config = ConfigDict(frozen=True)

    from_fqn: str
    to_fqn: str
    reasons: FrozenSet[DependencyReason]


class MetricsRow(BaseModel):
    """Coupling and cohesion metrics of one parsed class."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    class_fqn: str = Field(..., alias="class")
    ce: int = Field(..., ge=0, description="Efferent coupling")
    ca: int = Field(..., ge=0, description="Afferent coupling")
    dit: int = Field(..., ge=0, description="Depth of inheritance tree")
    cbo: int = Field(..., ge=0, description="Coupling between objects")
    rfc: int = Field(..., ge=0, description="Response for a class")
    lcom1: int = Field(..., ge=0, description="Method pairs with disjoint attribute sets")
    lcom2: int = Field(..., ge=0, description="Disjoint minus sharing pairs, clamped at 0")
    lcom3: int = Field(..., ge=0, description="Components of the attribute-sharing graph")
    lcom4: int = Field(..., ge=0, description="Components including intra-class calls")
    method_count: int = Field(..., ge=0)
    field_count: int = Field(..., ge=0)

    def metric(self, name: str) -> int:
        if name not in METRIC_NAMES:
            raise KeyError(name)
        return getattr(self, name)

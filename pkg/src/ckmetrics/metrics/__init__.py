"""
Metrics engine for ckmetrics.

Coupling (Ce, Ca, DIT, CBO, RFC) and cohesion (LCOM1-LCOM4) metrics over a
ClassModel.
"""

from .base_metric import BaseMetric, MetricRegistry
from .context import MetricContext
from .disjoint_set import DisjointSet
from .engine import (
    dependency_edges,
    efferent_coupling,
    afferent_coupling,
    package_coupling,
    depth_of_inheritance,
    coupling_between_objects,
    response_for_class,
    lcom1,
    lcom2,
    lcom3,
    lcom4,
    compute_all,
)

__all__ = [
    "BaseMetric",
    "MetricRegistry",
    "MetricContext",
    "DisjointSet",
    "dependency_edges",
    "efferent_coupling",
    "afferent_coupling",
    "package_coupling",
    "depth_of_inheritance",
    "coupling_between_objects",
    "response_for_class",
    "lcom1",
    "lcom2",
    "lcom3",
    "lcom4",
    "compute_all",
]

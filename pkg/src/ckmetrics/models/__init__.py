"""
Data models for ckmetrics.

This module exports the class model (the parser/generator/engine contract),
metric results, generator parameters and report structures.
"""

from .class_model import (
    UNRESOLVED,
    PRIMITIVE_TYPES,
    DEFAULT_PACKAGE_LABEL,
    SourceLocation,
    Diagnostic,
    FieldInfo,
    CallSite,
    MethodInfo,
    ClassInfo,
    ClassModel,
    is_primitive,
    package_of,
    package_label,
    qualify,
    simple_name,
)

from .validation import validate, inheritance_cycles, inheritance_graph

from .document import export_model, import_model, model_to_dict

from .metrics import (
    METRIC_NAMES,
    COUPLING_METRICS,
    COHESION_METRICS,
    DependencyEdge,
    MetricsRow,
)

from .generation import GenSpec

from .report import (
    ThresholdRule,
    Verdict,
    CorrelationEntry,
    CorrelationMatrix,
    MetricSummary,
    PackageRollup,
    SourceSummary,
    AnalysisReport,
)

__all__ = [
    # Class model
    "UNRESOLVED",
    "PRIMITIVE_TYPES",
    "DEFAULT_PACKAGE_LABEL",
    "SourceLocation",
    "Diagnostic",
    "FieldInfo",
    "CallSite",
    "MethodInfo",
    "ClassInfo",
    "ClassModel",
    "is_primitive",
    "package_of",
    "package_label",
    "qualify",
    "simple_name",
    "validate",
    "inheritance_cycles",
    "inheritance_graph",
    "export_model",
    "import_model",
    "model_to_dict",

    # Metrics
    "METRIC_NAMES",
    "COUPLING_METRICS",
    "COHESION_METRICS",
    "DependencyEdge",
    "MetricsRow",

    # Generation
    "GenSpec",

    # Report
    "ThresholdRule",
    "Verdict",
    "CorrelationEntry",
    "CorrelationMatrix",
    "MetricSummary",
    "PackageRollup",
    "SourceSummary",
    "AnalysisReport",
]

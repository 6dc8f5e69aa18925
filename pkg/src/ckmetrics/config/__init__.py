"""Configuration module for ckmetrics."""

from .standard_config import (
    ParserConfig,
    MetricsConfig,
    ReportConfig,
    GeneratorConfig,
    MonitoringConfig,
    StandardConfig,
    DEFAULT_CONFIG,
)

__all__ = [
    "ParserConfig",
    "MetricsConfig",
    "ReportConfig",
    "GeneratorConfig",
    "MonitoringConfig",
    "StandardConfig",
    "DEFAULT_CONFIG",
]

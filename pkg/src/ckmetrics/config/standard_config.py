"""
ckmetrics Standard Configuration

Defaults for parsing, metric computation, report rendering, synthetic
generation and logging. Command-line flags override these per run; the only
environment setting is ``CKM_COLOR`` (see ``config_helper``).
"""

from dataclasses import dataclass


@dataclass
class ParserConfig:
    """Source discovery and parsing."""

    suffix: str = ".java"
    jobs: int = 1  # worker processes for per-file parsing
    encoding: str = "utf-8"


@dataclass
class MetricsConfig:
    """Metric computation conventions."""

    # Constructors count as ordinary methods for LCOM and RFC unless disabled
    include_constructors: bool = True


@dataclass
class ReportConfig:
    """Report rendering."""

    format: str = "table"
    color: str = "auto"  # auto | always | never
    table_width: int = 120
    correlate: bool = False
    lcom_for_summary: str = "lcom2"


@dataclass
class GeneratorConfig:
    """Defaults for the ``generate`` sub-command."""

    seed: int = 0
    n_classes: int = 10
    n_packages: int = 2
    max_methods: int = 5
    max_fields: int = 5
    inheritance_prob: float = 0.3
    cross_class_call_prob: float = 0.3
    attribute_sharing: float = 0.5
    intra_class_call_prob: float = 0.2
    coupling_mode: str = "independent"


@dataclass
class MonitoringConfig:
    """Logging and run timing."""

    log_level: str = "WARNING"
    log_format: str = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
    track_timing: bool = True


@dataclass
class StandardConfig:
    """Complete standard configuration for ckmetrics."""

    parser: ParserConfig = None
    metrics: MetricsConfig = None
    report: ReportConfig = None
    generator: GeneratorConfig = None
    monitoring: MonitoringConfig = None

    def __post_init__(self):
        if self.parser is None:
            self.parser = ParserConfig()
        if self.metrics is None:
            self.metrics = MetricsConfig()
        if self.report is None:
            self.report = ReportConfig()
        if self.generator is None:
            self.generator = GeneratorConfig()
        if self.monitoring is None:
            self.monitoring = MonitoringConfig()

    @classmethod
    def load_default(cls) -> "StandardConfig":
        """Load default standard configuration."""
        return cls()


# Global default configuration
DEFAULT_CONFIG = StandardConfig.load_default()

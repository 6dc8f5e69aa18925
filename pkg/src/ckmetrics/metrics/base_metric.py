"""
Base metric class and registry.

Every metric of the suite is a ``BaseMetric`` subclass with a short column
name (``ce``, ``lcom2``, ...), a title and a description. Metrics compute one
integer per parsed class from a shared ``MetricContext``.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Type

from ..errors import ConfigError
from ..models.class_model import ClassInfo
from ..models.metrics import METRIC_NAMES
from .context import MetricContext

logger = logging.getLogger(__name__)


class BaseMetric(ABC):
    """
    Abstract base class for all metrics.

    Subclasses define ``NAME`` (one of ``METRIC_NAMES``), ``TITLE``,
    ``DESCRIPTION`` and ``KIND`` (``coupling`` or ``cohesion``), and implement
    ``compute``.
    """

    NAME: str = ""
    TITLE: str = ""
    DESCRIPTION: str = ""
    KIND: str = ""

    def __init__(self):
        if not self.NAME:
            raise ValueError("NAME must be defined in subclass")

    @abstractmethod
    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        """Value of this metric for one parsed class."""

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.NAME,
            "title": self.TITLE,
            "kind": self.KIND,
            "description": self.DESCRIPTION,
        }


class MetricRegistry:
    """
    Registry of metric instances, keyed by column name.

    Metrics register themselves with the ``register`` class decorator when
    their module is imported; ``all`` returns them in column order.
    """

    _metrics: Dict[str, BaseMetric] = {}

    @classmethod
    def register(cls, metric_class: Type[BaseMetric]) -> Type[BaseMetric]:
        metric = metric_class()
        if metric.NAME not in METRIC_NAMES:
            raise ValueError(f"{metric_class.__name__}.NAME '{metric.NAME}' is not a known metric column")
        cls._metrics[metric.NAME] = metric
        logger.debug(f"Registered metric {metric.NAME} ({metric_class.__name__})")
        return metric_class

    @classmethod
    def get(cls, name: str) -> BaseMetric:
        """
        Get a metric by column name.

        Raises:
            ConfigError: no metric has that name.
        """
        cls._load()
        try:
            return cls._metrics[name]
        except KeyError:
            raise ConfigError(f"unknown metric '{name}'; expected one of {', '.join(METRIC_NAMES)}") from None

    @classmethod
    def all(cls) -> List[BaseMetric]:
        cls._load()
        return [cls._metrics[name] for name in METRIC_NAMES]

    @classmethod
    def describe(cls) -> List[Dict[str, Any]]:
        return [metric.describe() for metric in cls.all()]

    @classmethod
    def _load(cls) -> None:
        if len(cls._metrics) < len(METRIC_NAMES):
            # Import here to avoid circular imports
            from . import cohesion, coupling  # noqa: F401

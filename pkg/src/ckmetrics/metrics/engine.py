"""
Metrics engine: one function per metric plus ``compute_all``.

Every function is pure over an immutable ClassModel. The single-class
functions build a fresh ``MetricContext``; ``compute_all`` shares one across
the whole model.
"""

import logging
from typing import FrozenSet, List, Tuple

from ..errors import NotFoundError
from ..models.class_model import DEFAULT_PACKAGE_LABEL, ClassModel
from ..models.metrics import DependencyEdge, MetricsRow
from .base_metric import MetricRegistry
from .context import MetricContext

logger = logging.getLogger(__name__)


def _measure(name: str, model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    context = MetricContext(model, include_constructors)
    return MetricRegistry.get(name).compute(context, context.require(class_fqn))


def dependency_edges(model: ClassModel) -> FrozenSet[DependencyEdge]:
    """One edge per ordered pair of distinct classes with at least one dependency reason."""
    return MetricContext(model).dependency_edges()


def efferent_coupling(model: ClassModel, class_fqn: str) -> int:
    return _measure("ce", model, class_fqn)


def afferent_coupling(model: ClassModel, class_fqn: str) -> int:
    return _measure("ca", model, class_fqn)


def depth_of_inheritance(model: ClassModel, class_fqn: str) -> int:
    return _measure("dit", model, class_fqn)


def coupling_between_objects(model: ClassModel, class_fqn: str) -> int:
    return _measure("cbo", model, class_fqn)


def response_for_class(model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    return _measure("rfc", model, class_fqn, include_constructors)


def lcom1(model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    return _measure("lcom1", model, class_fqn, include_constructors)


def lcom2(model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    return _measure("lcom2", model, class_fqn, include_constructors)


def lcom3(model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    return _measure("lcom3", model, class_fqn, include_constructors)


def lcom4(model: ClassModel, class_fqn: str, include_constructors: bool = True) -> int:
    return _measure("lcom4", model, class_fqn, include_constructors)


def package_coupling(model: ClassModel, package: str) -> Tuple[int, int]:
    """
    (ce, ca) of a package: distinct classes outside it that its members
    depend on, and distinct outside classes depending on its members.
    External classes are always outside.

    ``package`` may be given as ``(default)`` for the default package.

    Raises:
        NotFoundError: no parsed class belongs to ``package``.
    """
    if package == DEFAULT_PACKAGE_LABEL:
        package = ""
    if package not in model.packages:
        raise NotFoundError(f"package '{package or DEFAULT_PACKAGE_LABEL}' is not in the model")

    context = MetricContext(model)
    members = {c.fqn for c in model.internal_classes if c.package == package}
    outward = set()
    inward = set()
    for fqn in members:
        outward.update(t for t in context.outgoing(fqn) if t not in members)
        inward.update(s for s in context.incoming(fqn) if s not in members)
    return len(outward), len(inward)


def compute_all(model: ClassModel, include_constructors: bool = True) -> List[MetricsRow]:
    """
    Metrics rows for every parsed class, sorted by FQN.

    Raises:
        AnalysisError: the in-corpus inheritance graph has a cycle.
    """
    context = MetricContext(model, include_constructors)
    context.depths()
    metrics = MetricRegistry.all()

    rows = []
    for info in model.internal_classes:
        values = {metric.NAME: metric.compute(context, info) for metric in metrics}
        rows.append(MetricsRow(
            class_fqn=info.fqn,
            method_count=len(context.methods(info)),
            field_count=len(info.fields),
            **values,
        ))
        logger.debug(f"{info.fqn}: {values}")

    logger.info(f"Computed metrics for {len(rows)} classes")
    return rows

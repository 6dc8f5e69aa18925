"""
Coupling metrics: Ce, Ca, DIT, CBO and RFC.
"""

from typing import Set, Tuple

from ..models.class_model import UNRESOLVED, ClassInfo, is_primitive
from .base_metric import BaseMetric, MetricRegistry
from .context import MetricContext


@MetricRegistry.register
class EfferentCoupling(BaseMetric):
    NAME = "ce"
    TITLE = "Efferent coupling"
    KIND = "coupling"
    DESCRIPTION = (
        "Distinct classes this class depends on through field, parameter and "
        "return types, resolved calls and parents. External classes count."
    )

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return len(context.outgoing(info.fqn))


@MetricRegistry.register
class AfferentCoupling(BaseMetric):
    NAME = "ca"
    TITLE = "Afferent coupling"
    KIND = "coupling"
    DESCRIPTION = "Distinct parsed classes that depend on this class."

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return len(context.incoming(info.fqn))


@MetricRegistry.register
class DepthOfInheritance(BaseMetric):
    NAME = "dit"
    TITLE = "Depth of inheritance tree"
    KIND = "coupling"
    DESCRIPTION = (
        "Length of the longest chain of parsed ancestors; 0 for a class whose "
        "parents are all external or absent."
    )

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return context.depths()[info.fqn]


def service_types(info: ClassInfo) -> Set[str]:
    """Classes whose services ``info`` consumes: resolved call targets, parameter and return types."""
    used: Set[str] = set()
    for method in info.methods:
        used.update(c.target_class for c in method.calls if c.resolved)
        used.update(method.param_types)
        used.add(method.return_type)
    return {t for t in used if t != info.fqn and t != UNRESOLVED and not is_primitive(t)}


@MetricRegistry.register
class CouplingBetweenObjects(BaseMetric):
    NAME = "cbo"
    TITLE = "Coupling between objects"
    KIND = "coupling"
    DESCRIPTION = (
        "Distinct other classes whose methods this class calls or whose types "
        "its methods take or return. Parents count only when used that way."
    )

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return len(service_types(info))


@MetricRegistry.register
class ResponseForClass(BaseMetric):
    NAME = "rfc"
    TITLE = "Response for a class"
    KIND = "coupling"
    DESCRIPTION = (
        "Own methods plus the distinct methods they invoke directly; "
        "unresolved calls are left out."
    )

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        methods = context.methods(info)
        response: Set[Tuple[str, str, int]] = {(info.fqn, m.name, m.arity) for m in methods}
        for method in methods:
            response.update(c.key for c in method.calls if c.resolved)
        return len(response)

"""
Cohesion metrics: LCOM1 to LCOM4.

All four look at the attribute set of each method, the fields it reads or
writes. A method that touches no field shares nothing with any other method.
"""

from itertools import combinations
from typing import Dict, List, Tuple

from ..models.class_model import ClassInfo, MethodInfo
from .base_metric import BaseMetric, MetricRegistry
from .context import MetricContext
from .disjoint_set import DisjointSet


def pair_counts(methods: List[MethodInfo]) -> Tuple[int, int]:
    """(P, Q): method pairs with disjoint attribute sets, and pairs sharing at least one."""
    disjoint = sharing = 0
    for a, b in combinations(methods, 2):
        if a.attributes_used & b.attributes_used:
            sharing += 1
        else:
            disjoint += 1
    return disjoint, sharing


def sharing_components(methods: List[MethodInfo], info: ClassInfo, with_calls: bool) -> int:
    """Connected components of the method graph joined by shared attributes (and own calls)."""
    if not methods:
        return 0
    components = DisjointSet(len(methods))

    first_user: Dict[str, int] = {}
    for index, method in enumerate(methods):
        for attribute in method.attributes_used:
            if attribute in first_user:
                components.merge(first_user[attribute], index)
            else:
                first_user[attribute] = index

    if with_calls:
        position = {m.identity: i for i, m in enumerate(methods)}
        for index, method in enumerate(methods):
            for call in method.calls:
                if not call.resolved or call.target_class != info.fqn:
                    continue
                target = position.get((call.target_method, call.arity))
                if target is not None and target != index:
                    components.merge(index, target)

    return components.components


@MetricRegistry.register
class LackOfCohesion1(BaseMetric):
    NAME = "lcom1"
    TITLE = "Lack of cohesion in methods (pairs)"
    KIND = "cohesion"
    DESCRIPTION = "Method pairs whose attribute sets are disjoint; two empty sets count as disjoint."

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return pair_counts(context.methods(info))[0]


@MetricRegistry.register
class LackOfCohesion2(BaseMetric):
    NAME = "lcom2"
    TITLE = "Lack of cohesion in methods (pairs balance)"
    KIND = "cohesion"
    DESCRIPTION = "Disjoint pairs minus sharing pairs, never below 0."

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        disjoint, sharing = pair_counts(context.methods(info))
        return max(disjoint - sharing, 0)


@MetricRegistry.register
class LackOfCohesion3(BaseMetric):
    NAME = "lcom3"
    TITLE = "Lack of cohesion in methods (components)"
    KIND = "cohesion"
    DESCRIPTION = (
        "Connected components of the graph with one node per method and an edge "
        "between methods sharing an attribute; 0 when there are no methods."
    )

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return sharing_components(context.methods(info), info, with_calls=False)


@MetricRegistry.register
class LackOfCohesion4(BaseMetric):
    NAME = "lcom4"
    TITLE = "Lack of cohesion in methods (components with calls)"
    KIND = "cohesion"
    DESCRIPTION = "As lcom3, with an extra edge wherever one method calls another method of the same class."

    def compute(self, context: MetricContext, info: ClassInfo) -> int:
        return sharing_components(context.methods(info), info, with_calls=True)

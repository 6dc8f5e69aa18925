"""
Per-model state shared by the metrics: dependency edges, inheritance depth
and the method set each metric considers.
"""

import logging
from collections import defaultdict
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from ..errors import AnalysisError, NotFoundError
from ..models.class_model import UNRESOLVED, ClassInfo, ClassModel, MethodInfo, is_primitive
from ..models.metrics import DependencyEdge

logger = logging.getLogger(__name__)


class MetricContext:
    """
    Lazily computed, cached facts about one immutable ClassModel.

    ``include_constructors`` controls whether constructors take part in
    LCOM1-4, RFC and ``method_count``.
    """

    def __init__(self, model: ClassModel, include_constructors: bool = True):
        self.model = model
        self.include_constructors = include_constructors
        self._reasons: Optional[Dict[Tuple[str, str], FrozenSet[str]]] = None
        self._outgoing: Optional[Dict[str, Set[str]]] = None
        self._incoming: Optional[Dict[str, Set[str]]] = None
        self._dit: Optional[Dict[str, int]] = None

    def require(self, fqn: str) -> ClassInfo:
        """
        The parsed class ``fqn``.

        Raises:
            NotFoundError: ``fqn`` is unknown or an external stub.
        """
        info = self.model.get(fqn)
        if info is None:
            raise NotFoundError(f"class '{fqn}' is not in the model")
        if info.is_external:
            raise NotFoundError(f"class '{fqn}' is an external stub and has no metrics")
        return info

    def methods(self, info: ClassInfo) -> List[MethodInfo]:
        if self.include_constructors:
            return list(info.methods)
        return [m for m in info.methods if not info.is_constructor(m)]

    # Dependencies

    def _collect(self) -> None:
        reasons: Dict[Tuple[str, str], Set[str]] = defaultdict(set)
        for info in self.model.internal_classes:
            def add(target: str, reason: str) -> None:
                if target != info.fqn and target != UNRESOLVED and not is_primitive(target):
                    reasons[(info.fqn, target)].add(reason)

            for field in info.fields:
                add(field.declared_type, "field-type")
            for method in info.methods:
                for param in method.param_types:
                    add(param, "param-type")
                add(method.return_type, "return-type")
                for call in method.calls:
                    if call.resolved:
                        add(call.target_class, "call")
            for parent in info.parents:
                add(parent, "parent")

        outgoing: Dict[str, Set[str]] = defaultdict(set)
        incoming: Dict[str, Set[str]] = defaultdict(set)
        for source, target in reasons:
            outgoing[source].add(target)
            incoming[target].add(source)

        self._reasons = {pair: frozenset(found) for pair, found in reasons.items()}
        self._outgoing = outgoing
        self._incoming = incoming
        logger.debug(f"Collected {len(self._reasons)} dependency edges")

    @property
    def reasons(self) -> Dict[Tuple[str, str], FrozenSet[str]]:
        if self._reasons is None:
            self._collect()
        return self._reasons

    def dependency_edges(self) -> FrozenSet[DependencyEdge]:
        return frozenset(
            DependencyEdge(from_fqn=source, to_fqn=target, reasons=found)
            for (source, target), found in self.reasons.items()
        )

    def outgoing(self, fqn: str) -> Set[str]:
        if self._outgoing is None:
            self._collect()
        return self._outgoing.get(fqn, set())

    def incoming(self, fqn: str) -> Set[str]:
        if self._incoming is None:
            self._collect()
        return self._incoming.get(fqn, set())

    # Inheritance

    def depths(self) -> Dict[str, int]:
        """
        Longest in-corpus parent chain for every parsed class.

        Raises:
            AnalysisError: the in-corpus inheritance graph has a cycle.
        """
        if self._dit is not None:
            return self._dit

        graph = nx.DiGraph()
        for info in self.model.internal_classes:
            graph.add_node(info.fqn)
        for info in self.model.internal_classes:
            for parent in info.parents:
                if parent in graph:
                    graph.add_edge(info.fqn, parent)

        try:
            order = list(nx.topological_sort(graph))
        except nx.NetworkXUnfeasible:
            cycle = [source for source, _ in nx.find_cycle(graph)]
            pivot = cycle.index(min(cycle))
            cycle = cycle[pivot:] + cycle[:pivot]
            raise AnalysisError("inheritance cycle: " + " -> ".join(cycle + cycle[:1]), cycle) from None

        depth: Dict[str, int] = {}
        for node in reversed(order):
            depth[node] = max((depth[parent] + 1 for parent in graph.successors(node)), default=0)
        self._dit = depth
        return depth

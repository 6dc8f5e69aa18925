"""
Invariant checks for a ClassModel.

``validate`` reports every violation as a Diagnostic and never raises or
mutates the model.
"""

import logging
from collections import Counter
from typing import List

import networkx as nx

from .class_model import (
    MODEL_LOCATION,
    UNRESOLVED,
    ClassInfo,
    ClassModel,
    Diagnostic,
    is_primitive,
    package_of,
)

logger = logging.getLogger(__name__)


def _error(message: str) -> Diagnostic:
    return Diagnostic.error(MODEL_LOCATION, message)


def inheritance_graph(model: ClassModel) -> nx.DiGraph:
    """Directed graph child -> parent over every class named in the model."""
    graph = nx.DiGraph()
    for info in model.classes:
        graph.add_node(info.fqn)
        for parent in info.parents:
            graph.add_edge(info.fqn, parent)
    return graph


def inheritance_cycles(model: ClassModel) -> List[List[str]]:
    """Elementary inheritance cycles, each rotated to start at its smallest FQN."""
    cycles = []
    for cycle in nx.simple_cycles(inheritance_graph(model)):
        pivot = cycle.index(min(cycle))
        cycles.append(cycle[pivot:] + cycle[:pivot])
    return sorted(cycles)


def _check_type(model: ClassModel, owner: str, what: str, type_name: str) -> List[Diagnostic]:
    if is_primitive(type_name) or type_name in model:
        return []
    return [_error(f"{owner}: {what} refers to unknown type '{type_name}'")]


def _check_class(model: ClassModel, info: ClassInfo) -> List[Diagnostic]:
    problems: List[Diagnostic] = []
    fqn = info.fqn

    if info.package != package_of(fqn):
        problems.append(_error(f"{fqn}: package '{info.package}' does not match its FQN"))

    if info.is_external:
        if info.fields or info.methods:
            problems.append(_error(f"{fqn}: external stub must not declare fields or methods"))
        return problems

    for parent in info.parents:
        if parent not in model:
            problems.append(_error(f"{fqn}: parent '{parent}' is not in the model"))

    for name, count in sorted(Counter(f.name for f in info.fields).items()):
        if count > 1:
            problems.append(_error(f"{fqn}: field '{name}' declared {count} times"))
    for field in info.fields:
        problems.extend(_check_type(model, fqn, f"field '{field.name}'", field.declared_type))

    for (name, arity), count in sorted(Counter(m.identity for m in info.methods).items()):
        if count > 1:
            problems.append(_error(f"{fqn}: method '{name}/{arity}' declared {count} times"))

    visible = model.visible_field_names(fqn)
    for method in info.methods:
        where = f"{fqn}.{method.name}/{method.arity}"
        if method.arity != len(method.param_types):
            problems.append(_error(f"{where}: arity does not match {len(method.param_types)} parameter types"))
        for index, param in enumerate(method.param_types):
            problems.extend(_check_type(model, where, f"parameter {index + 1}", param))
        problems.extend(_check_type(model, where, "return type", method.return_type))
        for attribute in sorted(method.attributes_used - visible):
            problems.append(_error(f"{where}: uses '{attribute}' which is not a field of {fqn} or its ancestors"))
        for call in sorted(method.calls, key=lambda c: (c.key, c.resolved)):
            if not call.resolved:
                continue
            target = model.get(call.target_class)
            if call.target_class == UNRESOLVED or target is None:
                problems.append(_error(f"{where}: resolved call to unknown class '{call.target_class}'"))
            elif target.is_external:
                continue
            elif (model.find_method(call.target_class, call.target_method, call.arity) is None
                  and model.external_ancestor(call.target_class) is None):
                problems.append(_error(
                    f"{where}: resolved call {call.target_class}.{call.target_method}/{call.arity} "
                    "matches no method of the target or its ancestors"
                ))
    return problems


def validate(model: ClassModel) -> List[Diagnostic]:
    """
    Check the class-model invariants.

    Returns one error diagnostic per violation; an empty list means the model
    is valid.
    """
    problems: List[Diagnostic] = []

    for fqn, count in sorted(Counter(c.fqn for c in model.classes).items()):
        if count > 1:
            problems.append(_error(f"duplicate class FQN '{fqn}' ({count} declarations)"))

    seen = set()
    for info in model.classes:
        if info.fqn in seen:
            continue
        seen.add(info.fqn)
        problems.extend(_check_class(model, info))

    for cycle in inheritance_cycles(model):
        problems.append(_error("inheritance cycle: " + " -> ".join(cycle + cycle[:1])))

    if problems:
        logger.debug(f"Model validation found {len(problems)} problem(s)")
    return problems

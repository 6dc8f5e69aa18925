"""
Seeded synthetic ClassModel generator.

Generation runs in two passes over the classes. The first fixes each class's
shape (package, field and method counts, method arities, parent, quality);
the second draws the facts (field, parameter and return types, attribute
sets, calls). All draws come from one numpy ``PCG64`` stream seeded with
``GenSpec.seed``, in a fixed order, so equal specs give equal models.

Cohesion: the fields of a class are split into one group per method
(field ``k`` goes to method ``k % m``). Each method uses a non-empty random
subset of its own group, plus the shared field ``f0`` with probability equal
to the class's sharing. Sharing 1 therefore joins every method through
``f0``; sharing 0 leaves every pair of methods disjoint.

Coupling: each class draws up to ``max_methods`` collaborator classes, each
slot filled with the class's call probability. Every collaborator is called
from some method, and parameter and return types are drawn from the
collaborators, so CBO equals the number of collaborators.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import numpy as np

from ..errors import GenerationError
from ..models.class_model import CallSite, ClassInfo, ClassModel, FieldInfo, MethodInfo
from ..models.generation import GenSpec

logger = logging.getLogger(__name__)

MAX_ARITY = 2
OWN_FIELD_PROB = 0.5


@dataclass
class _Shape:
    fqn: str
    package: str
    n_fields: int
    arities: List[int]
    parent: Optional[int]
    sharing: float
    call_prob: float


def _class_knobs(spec: GenSpec, quality: float) -> Tuple[float, float]:
    if spec.coupling_mode == "inverse":
        return spec.attribute_sharing * quality, spec.cross_class_call_prob * quality
    if spec.coupling_mode == "direct":
        return spec.attribute_sharing * quality, spec.cross_class_call_prob * (1.0 - quality)
    return spec.attribute_sharing, spec.cross_class_call_prob


def _shapes(spec: GenSpec, rng: np.random.Generator) -> List[_Shape]:
    shapes = []
    for i in range(spec.n_classes):
        package = f"p{i % spec.n_packages}"
        n_fields = int(rng.integers(1, spec.max_fields + 1)) if spec.max_fields else 0
        n_methods = int(rng.integers(1, spec.max_methods + 1)) if spec.max_methods else 0
        arities = [int(a) for a in rng.integers(0, MAX_ARITY + 1, size=n_methods)]
        parent = None
        if i > 0 and rng.random() < spec.inheritance_prob:
            parent = int(rng.integers(0, i))
        quality = float(rng.random()) if spec.coupling_mode != "independent" else 1.0
        sharing, call_prob = _class_knobs(spec, quality)
        shapes.append(_Shape(f"{package}.C{i}", package, n_fields, arities, parent, sharing, call_prob))
    return shapes


def _pick(rng: np.random.Generator, items: List[int]) -> int:
    return items[int(rng.integers(len(items)))]


def _build_class(index: int, shapes: List[_Shape], rng: np.random.Generator, spec: GenSpec) -> ClassInfo:
    shape = shapes[index]
    n_methods = len(shape.arities)
    others = [k for k in range(len(shapes)) if k != index]
    callable_others = [k for k in others if shapes[k].arities]

    collaborators: List[int] = []
    if callable_others:
        for _ in range(spec.max_methods):
            if rng.random() < shape.call_prob:
                collaborators.append(_pick(rng, callable_others))
        collaborators = sorted(set(collaborators))

    fields = []
    for j in range(shape.n_fields):
        declared = "int"
        if others and rng.random() < shape.call_prob:
            declared = shapes[_pick(rng, others)].fqn
        fields.append(FieldInfo(name=f"f{j}", type=declared))

    signatures = []
    attribute_sets: List[Set[str]] = []
    calls: List[Set[CallSite]] = []
    for j, arity in enumerate(shape.arities):
        params = []
        for _ in range(arity):
            declared = "int"
            if collaborators and rng.random() < shape.call_prob:
                declared = shapes[_pick(rng, collaborators)].fqn
            params.append(declared)
        returns = "void"
        if collaborators and rng.random() < shape.call_prob:
            returns = shapes[_pick(rng, collaborators)].fqn
        signatures.append((tuple(params), returns))

        own = [k for k in range(shape.n_fields) if k % n_methods == j]
        used = {f"f{k}" for k in own if rng.random() < OWN_FIELD_PROB}
        if own and not used:
            used.add(f"f{_pick(rng, own)}")
        if shape.n_fields and rng.random() < shape.sharing:
            used.add("f0")
        attribute_sets.append(used)

        method_calls: Set[CallSite] = set()
        if n_methods > 1 and rng.random() < spec.intra_class_call_prob:
            target = _pick(rng, [k for k in range(n_methods) if k != j])
            method_calls.add(CallSite(
                target_class=shape.fqn, target_method=f"m{target}", arity=shape.arities[target], resolved=True,
            ))
        calls.append(method_calls)

    for collaborator in collaborators:
        caller = int(rng.integers(n_methods))
        target_shape = shapes[collaborator]
        target = int(rng.integers(len(target_shape.arities)))
        calls[caller].add(CallSite(
            target_class=target_shape.fqn, target_method=f"m{target}",
            arity=target_shape.arities[target], resolved=True,
        ))

    methods = [
        MethodInfo(
            name=f"m{j}",
            arity=arity,
            params=signatures[j][0],
            returns=signatures[j][1],
            uses=frozenset(attribute_sets[j]),
            calls=frozenset(calls[j]),
        )
        for j, arity in enumerate(shape.arities)
    ]
    parents = (shapes[shape.parent].fqn,) if shape.parent is not None else ()
    return ClassInfo(
        fqn=shape.fqn,
        package=shape.package,
        parents=parents,
        fields=tuple(fields),
        methods=tuple(methods),
    )


def generate(spec: GenSpec) -> ClassModel:
    """
    Generate a valid, acyclic ClassModel from ``spec``.

    Parents are only drawn from earlier classes and classes are assigned to
    packages ``p0``, ``p1``, ... round-robin.

    Raises:
        GenerationError: attribute sharing was requested without any fields.
    """
    if spec.max_fields == 0 and spec.attribute_sharing > 0:
        raise GenerationError("attribute_sharing > 0 needs max_fields >= 1")

    rng = np.random.Generator(np.random.PCG64(spec.seed))
    shapes = _shapes(spec, rng)
    classes = [_build_class(i, shapes, rng, spec) for i in range(len(shapes))]
    logger.info(f"Generated {len(classes)} classes in {min(spec.n_packages, len(classes))} packages (seed {spec.seed})")
    return ClassModel(classes=tuple(classes))

"""Terse constructors for hand-built class models."""

from typing import Iterable, Sequence, Tuple, Union

from ckmetrics.models import UNRESOLVED, CallSite, ClassInfo, FieldInfo, MethodInfo, package_of

FieldSpec = Union[str, Tuple[str, str]]


def call(target: str, name: str, arity: int) -> CallSite:
    return CallSite(target_class=target, target_method=name, arity=arity, resolved=target != UNRESOLVED)


def method(
    name: str,
    *,
    params: Sequence[str] = (),
    returns: str = "void",
    uses: Iterable[str] = (),
    calls: Iterable[Tuple[str, str, int]] = (),
) -> MethodInfo:
    return MethodInfo(
        name=name,
        arity=len(params),
        params=tuple(params),
        returns=returns,
        uses=frozenset(uses),
        calls=frozenset(call(*c) for c in calls),
    )


def klass(
    fqn: str,
    *,
    parents: Sequence[str] = (),
    fields: Sequence[FieldSpec] = (),
    methods: Sequence[MethodInfo] = (),
    kind: str = "class",
    external: bool = False,
) -> ClassInfo:
    """A class; a field given as a bare name has type ``int``."""
    declared = [FieldInfo(name=f, type="int") if isinstance(f, str) else FieldInfo(name=f[0], type=f[1]) for f in fields]
    return ClassInfo(
        fqn=fqn,
        package=package_of(fqn),
        kind=kind,
        external=external,
        parents=tuple(parents),
        fields=tuple(declared),
        methods=tuple(methods),
    )

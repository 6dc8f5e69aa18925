"""
Class model for ckmetrics.

The class model is the language-neutral intermediate representation shared by
the source parser, the synthetic generator and the metrics engine: classes,
their packages and parents, fields, and per-method facts (parameter and return
types, attributes used, calls made).

Every collection is canonicalised on construction (parents, fields, methods and
classes sorted), so two models with the same content compare equal and export
to the same bytes whatever order they were assembled in.
"""

from typing import Dict, FrozenSet, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

UNRESOLVED = "?"

PRIMITIVE_TYPES = frozenset({
    "byte", "short", "int", "long", "float", "double", "boolean", "char", "void",
})

DEFAULT_PACKAGE_LABEL = "(default)"


def is_primitive(type_name: str) -> bool:
    """True for primitive tags (including ``void``)."""
    return type_name in PRIMITIVE_TYPES


def package_of(fqn: str) -> str:
    """Package part of a fully-qualified name; empty for the default package."""
    return fqn.rpartition(".")[0]


def simple_name(fqn: str) -> str:
    """Last segment of a fully-qualified name."""
    return fqn.rpartition(".")[2]


def qualify(package: str, name: str) -> str:
    """Join a package and a simple name into a fully-qualified name."""
    return f"{package}.{name}" if package else name


def package_label(package: str) -> str:
    """Human-facing package name: the default package is shown as ``(default)``."""
    return package or DEFAULT_PACKAGE_LABEL


class SourceLocation(BaseModel):
    """A file position; lines and columns are 1-based."""

    model_config = ConfigDict(frozen=True)

    file: str
    line: int = Field(default=1, ge=1)
    column: int = Field(default=1, ge=1)

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


MODEL_LOCATION = SourceLocation(file="<model>", line=1, column=1)


class Diagnostic(BaseModel):
    """A warning or error found while lexing, parsing, resolving or validating."""

    model_config = ConfigDict(frozen=True)

    severity: Literal["warning", "error"]
    location: SourceLocation
    message: str

    @classmethod
    def warning(cls, location: SourceLocation, message: str) -> "Diagnostic":
        return cls(severity="warning", location=location, message=message)

    @classmethod
    def error(cls, location: SourceLocation, message: str) -> "Diagnostic":
        return cls(severity="error", location=location, message=message)

    @property
    def is_error(self) -> bool:
        return self.severity == "error"

    def __str__(self) -> str:
        return f"{self.location}: {self.severity}: {self.message}"


class _SchemaModel(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")


class FieldInfo(_SchemaModel):
    """A declared attribute of a class."""

    name: str = Field(..., min_length=1)
    declared_type: str = Field(..., alias="type", description="FQN or primitive tag")


class CallSite(_SchemaModel):
    """A method invocation found in a method body."""

    target_class: str = Field(..., alias="class", description="Declaring class FQN or UNRESOLVED")
    target_method: str = Field(..., alias="method")
    arity: int = Field(..., ge=0)
    resolved: bool

    @property
    def key(self) -> Tuple[str, str, int]:
        return (self.target_class, self.target_method, self.arity)


class MethodInfo(_SchemaModel):
    """Structural facts about one method."""

    name: str = Field(..., min_length=1)
    arity: int = Field(..., ge=0)
    param_types: Tuple[str, ...] = Field(default=(), alias="params")
    return_type: str = Field(default="void", alias="returns")
    attributes_used: FrozenSet[str] = Field(default=frozenset(), alias="uses")
    calls: FrozenSet[CallSite] = Field(default=frozenset())

    @property
    def identity(self) -> Tuple[str, int]:
        return (self.name, self.arity)


class ClassInfo(_SchemaModel):
    """A class, interface or external stub."""

    fqn: str = Field(..., min_length=1)
    package: str = ""
    kind: Literal["class", "interface"] = "class"
    is_external: bool = Field(default=False, alias="external")
    parents: Tuple[str, ...] = ()
    fields: Tuple[FieldInfo, ...] = ()
    methods: Tuple[MethodInfo, ...] = ()

    @field_validator("parents")
    @classmethod
    def _sort_parents(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        return tuple(sorted(set(value)))

    @field_validator("fields")
    @classmethod
    def _sort_fields(cls, value: Tuple[FieldInfo, ...]) -> Tuple[FieldInfo, ...]:
        return tuple(sorted(value, key=lambda f: f.name))

    @field_validator("methods")
    @classmethod
    def _sort_methods(cls, value: Tuple[MethodInfo, ...]) -> Tuple[MethodInfo, ...]:
        return tuple(sorted(value, key=lambda m: m.identity))

    @classmethod
    def stub(cls, fqn: str) -> "ClassInfo":
        """Placeholder for a class referenced but not analysed."""
        return cls(fqn=fqn, package=package_of(fqn), is_external=True)

    @property
    def simple_name(self) -> str:
        return simple_name(self.fqn)

    def field(self, name: str) -> Optional[FieldInfo]:
        for f in self.fields:
            if f.name == name:
                return f
        return None

    def method(self, name: str, arity: int) -> Optional[MethodInfo]:
        for m in self.methods:
            if m.name == name and m.arity == arity:
                return m
        return None

    def is_constructor(self, method: MethodInfo) -> bool:
        return method.name == self.simple_name


class ClassModel(BaseModel):
    """The whole-program class graph."""

    model_config = ConfigDict(frozen=True)

    classes: Tuple[ClassInfo, ...] = ()
    resolution_diagnostics: Tuple[Diagnostic, ...] = Field(default=(), exclude=True)

    _index: Dict[str, ClassInfo] = PrivateAttr(default_factory=dict)

    @field_validator("classes")
    @classmethod
    def _sort_classes(cls, value: Tuple[ClassInfo, ...]) -> Tuple[ClassInfo, ...]:
        return tuple(sorted(value, key=lambda c: c.fqn))

    def model_post_init(self, __context) -> None:
        index: Dict[str, ClassInfo] = {}
        for info in self.classes:
            index.setdefault(info.fqn, info)
        self._index = index

    def __contains__(self, fqn: object) -> bool:
        return fqn in self._index

    def get(self, fqn: str) -> Optional[ClassInfo]:
        return self._index.get(fqn)

    @property
    def internal_classes(self) -> List[ClassInfo]:
        """Parsed (non-external) classes, sorted by FQN, first occurrence only."""
        return [c for fqn, c in sorted(self._index.items()) if not c.is_external]

    @property
    def packages(self) -> List[str]:
        return sorted({c.package for c in self._index.values() if not c.is_external})

    @property
    def inheritance_edges(self) -> FrozenSet[Tuple[str, str]]:
        return frozenset((c.fqn, p) for c in self.classes for p in c.parents)

    def ancestors(self, fqn: str) -> List[str]:
        """All ancestors of ``fqn`` in breadth-first order (nearest first)."""
        start = self.get(fqn)
        if start is None:
            return []
        seen = {fqn}
        order: List[str] = []
        frontier = list(start.parents)
        while frontier:
            nxt: List[str] = []
            for parent in frontier:
                if parent in seen:
                    continue
                seen.add(parent)
                order.append(parent)
                info = self.get(parent)
                if info is not None:
                    nxt.extend(info.parents)
            frontier = nxt
        return order

    def find_field(self, fqn: str, name: str) -> Optional[Tuple[str, FieldInfo]]:
        """Nearest declaration of field ``name`` visible from ``fqn``."""
        for owner in [fqn, *self.ancestors(fqn)]:
            info = self.get(owner)
            if info is None:
                continue
            found = info.field(name)
            if found is not None:
                return owner, found
        return None

    def find_method(self, fqn: str, name: str, arity: int) -> Optional[str]:
        """FQN of the nearest class declaring ``name/arity``, searching ``fqn`` then ancestors."""
        for owner in [fqn, *self.ancestors(fqn)]:
            info = self.get(owner)
            if info is not None and info.method(name, arity) is not None:
                return owner
        return None

    def external_ancestor(self, fqn: str) -> Optional[str]:
        """Nearest ancestor that is an external stub (or missing from the model)."""
        for owner in self.ancestors(fqn):
            info = self.get(owner)
            if info is None or info.is_external:
                return owner
        return None

    def visible_field_names(self, fqn: str) -> FrozenSet[str]:
        names = set()
        for owner in [fqn, *self.ancestors(fqn)]:
            info = self.get(owner)
            if info is not None:
                names.update(f.name for f in info.fields)
        return frozenset(names)

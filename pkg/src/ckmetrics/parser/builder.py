"""
Model builder: turns parsed SyntaxUnits into a ClassModel.

Type names are resolved in this order: (1) types declared in the same file,
(2) explicit imports, (3) types of the same package, (4) an external stub
named as written. Method bodies are walked with a scope stack so that locals
and parameters shadow fields; a bare identifier or ``this.f`` naming a
visible field is recorded as an attribute use. Calls are resolved by the
receiver's declared type, name and arity, searching the receiver class and
then its ancestors.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from ..models.class_model import (
    UNRESOLVED,
    CallSite,
    ClassInfo,
    ClassModel,
    Diagnostic,
    FieldInfo,
    MethodInfo,
    SourceLocation,
    is_primitive,
    qualify,
    simple_name,
)
from .syntax import (
    Block,
    Call,
    Cast,
    ConstructorCall,
    Expr,
    ExprStmt,
    FieldAccess,
    If,
    Literal,
    LocalDecl,
    MethodDecl,
    Name,
    New,
    Operation,
    Return,
    Stmt,
    Super,
    SyntaxUnit,
    This,
    TypeDecl,
    While,
)

logger = logging.getLogger(__name__)


@dataclass
class _FileScope:
    """Names visible to every declaration of one file."""

    package: str
    local: Dict[str, str]
    imports: Dict[str, str]


@dataclass
class _Declaration:
    fqn: str
    unit: SyntaxUnit
    decl: TypeDecl
    scope: _FileScope
    parents: List[str] = field(default_factory=list)
    superclass: Optional[str] = None
    methods: List[Tuple[MethodDecl, MethodInfo]] = field(default_factory=list)


class ModelBuilder:
    """Single-threaded merge of SyntaxUnits into one ClassModel."""

    def __init__(self, units: Iterable[SyntaxUnit]):
        self.units = sorted(units, key=lambda u: u.file)
        self.diagnostics: List[Diagnostic] = []
        self.declared: Dict[str, _Declaration] = {}
        self.by_package: Dict[str, Dict[str, str]] = defaultdict(dict)
        self.externals: Set[str] = set()

    def warn(self, location: SourceLocation, message: str) -> None:
        self.diagnostics.append(Diagnostic.warning(location, message))

    def error(self, location: SourceLocation, message: str) -> None:
        self.diagnostics.append(Diagnostic.error(location, message))

    # Names

    def resolve_type(self, scope: _FileScope, name: str) -> str:
        if is_primitive(name):
            return name
        if "." in name:
            return name
        for table in (scope.local, scope.imports, self.by_package.get(scope.package, {})):
            if name in table:
                return table[name]
        return name

    def use(self, fqn: str) -> str:
        """Note that ``fqn`` appears in the model; unknown names become external stubs."""
        if not is_primitive(fqn) and fqn not in self.declared:
            self.externals.add(fqn)
        return fqn

    def is_internal(self, fqn: Optional[str]) -> bool:
        return fqn is not None and fqn in self.declared

    # Passes

    def declare(self) -> None:
        for unit in self.units:
            local: Dict[str, str] = {}
            imports = {simple_name(name): name for name in unit.imports}
            scope = _FileScope(unit.package, local, imports)
            for decl in unit.type_decls:
                fqn = qualify(unit.package, decl.name)
                local.setdefault(decl.name, fqn)
                if fqn in self.declared:
                    first = self.declared[fqn].decl.location
                    self.error(decl.location, f"duplicate class '{fqn}' (first declared at {first}); keeping the first")
                    continue
                self.declared[fqn] = _Declaration(fqn, unit, decl, scope)
                self.by_package[unit.package].setdefault(decl.name, fqn)

    def link_parents(self) -> None:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.declared)
        for fqn in sorted(self.declared):
            entry = self.declared[fqn]
            refs = [(ref, "extends") for ref in entry.decl.extends]
            refs += [(ref, "implements") for ref in entry.decl.implements]
            for ref, clause in refs:
                parent = self.resolve_type(entry.scope, ref.name)
                if parent in entry.parents:
                    continue
                if parent == fqn or (parent in graph and nx.has_path(graph, parent, fqn)):
                    self.error(ref.location, f"inheritance cycle: {fqn} {clause} {parent} closes a cycle; edge dropped")
                    continue
                graph.add_edge(fqn, parent)
                entry.parents.append(self.use(parent))
                if clause == "extends" and entry.decl.kind == "class" and entry.superclass is None:
                    entry.superclass = parent

    def signature(self, entry: _Declaration, decl: MethodDecl) -> MethodInfo:
        params = tuple(self.use(self.resolve_type(entry.scope, p.type.name)) for p in decl.params)
        returns = "void"
        if decl.return_type is not None:
            returns = self.use(self.resolve_type(entry.scope, decl.return_type.name))
        return MethodInfo(name=decl.name, arity=decl.arity, params=params, returns=returns)

    def skeleton(self, entry: _Declaration) -> ClassInfo:
        fields: Dict[str, FieldInfo] = {}
        for decl in entry.decl.fields:
            if decl.name in fields:
                self.warn(decl.location, f"field '{decl.name}' is already declared in {entry.fqn}; keeping the first")
                continue
            declared_type = self.use(self.resolve_type(entry.scope, decl.type.name))
            fields[decl.name] = FieldInfo(name=decl.name, type=declared_type)

        seen: Set[Tuple[str, int]] = set()
        for decl in entry.decl.methods:
            if (decl.name, decl.arity) in seen:
                self.warn(
                    decl.location,
                    f"method '{decl.name}/{decl.arity}' is already declared in {entry.fqn}; keeping the first",
                )
                continue
            seen.add((decl.name, decl.arity))
            entry.methods.append((decl, self.signature(entry, decl)))

        return ClassInfo(
            fqn=entry.fqn,
            package=entry.unit.package,
            kind=entry.decl.kind,
            parents=tuple(entry.parents),
            fields=tuple(fields.values()),
            methods=tuple(info for _, info in entry.methods),
        )

    def build(self) -> ClassModel:
        self.declare()
        self.link_parents()
        skeletons = [self.skeleton(self.declared[fqn]) for fqn in sorted(self.declared)]
        skeleton_model = ClassModel(classes=tuple(skeletons))

        classes: List[ClassInfo] = []
        for info in skeletons:
            entry = self.declared[info.fqn]
            methods = []
            for decl, signature in entry.methods:
                facts = _FactCollector(self, entry, skeleton_model, decl)
                facts.collect()
                methods.append(signature.model_copy(update={
                    "attributes_used": frozenset(facts.attributes),
                    "calls": frozenset(facts.calls),
                }))
            methods.sort(key=lambda m: m.identity)
            classes.append(info.model_copy(update={"methods": tuple(methods)}))

        classes.extend(ClassInfo.stub(fqn) for fqn in sorted(self.externals - set(self.declared)))

        diagnostics = [d for unit in self.units for d in unit.diagnostics] + self.diagnostics
        diagnostics.sort(key=lambda d: (d.location.file, d.location.line, d.location.column))

        warnings = sum(1 for d in self.diagnostics if not d.is_error)
        if warnings:
            logger.warning(f"{warnings} warning(s) while resolving names; see the report diagnostics")
        for diagnostic in self.diagnostics:
            logger.debug(str(diagnostic))
        logger.info(
            f"Built model: {len(self.declared)} classes, {len(self.externals)} external stubs "
            f"from {len(self.units)} files"
        )
        return ClassModel(classes=tuple(classes), resolution_diagnostics=tuple(diagnostics))


class _FactCollector:
    """Walks one method body, collecting attribute uses and call sites."""

    def __init__(self, builder: ModelBuilder, entry: _Declaration, model: ClassModel, decl: MethodDecl):
        self.builder = builder
        self.entry = entry
        self.model = model
        self.decl = decl
        self.fqn = entry.fqn
        self.attributes: Set[str] = set()
        self.calls: Set[CallSite] = set()
        self.frames: List[Dict[str, str]] = [{}]

    def collect(self) -> None:
        for param in self.decl.params:
            self.frames[0][param.name] = self.resolve(param.type.name)
        if self.decl.body is not None:
            self.statement(self.decl.body)

    def resolve(self, name: str) -> str:
        return self.builder.resolve_type(self.entry.scope, name)

    def local(self, name: str) -> Optional[str]:
        for frame in reversed(self.frames):
            if name in frame:
                return frame[name]
        return None

    def is_local(self, name: str) -> bool:
        return any(name in frame for frame in self.frames)

    def is_field(self, name: str) -> bool:
        return self.model.find_field(self.fqn, name) is not None

    # Statements

    def scoped(self, statement: Stmt) -> None:
        self.frames.append({})
        try:
            self.statement(statement)
        finally:
            self.frames.pop()

    def statement(self, statement: Stmt) -> None:
        if isinstance(statement, Block):
            self.frames.append({})
            for inner in statement.statements:
                self.statement(inner)
            self.frames.pop()
        elif isinstance(statement, LocalDecl):
            declared = self.resolve(statement.type.name)
            for name, initial in statement.names:
                if initial is not None:
                    self.expression(initial)
                self.frames[-1][name] = declared
        elif isinstance(statement, ExprStmt):
            self.expression(statement.expr)
        elif isinstance(statement, Return):
            if statement.value is not None:
                self.expression(statement.value)
        elif isinstance(statement, If):
            self.expression(statement.condition)
            self.scoped(statement.then)
            if statement.otherwise is not None:
                self.scoped(statement.otherwise)
        elif isinstance(statement, While):
            self.expression(statement.condition)
            self.scoped(statement.body)

    # Expressions; each returns the static type when it is known

    def expression(self, expr: Expr) -> Optional[str]:
        if isinstance(expr, Name):
            return self.name(expr)
        if isinstance(expr, This):
            return self.fqn
        if isinstance(expr, Super):
            return self.entry.superclass
        if isinstance(expr, FieldAccess):
            return self.field_access(expr)
        if isinstance(expr, Call):
            return self.call(expr)
        if isinstance(expr, ConstructorCall):
            self.constructor_call(expr)
            return None
        if isinstance(expr, New):
            for arg in expr.args:
                self.expression(arg)
            return self.resolve(expr.type.name)
        if isinstance(expr, Cast):
            self.expression(expr.operand)
            return self.resolve(expr.type.name)
        if isinstance(expr, Operation):
            for operand in expr.operands:
                self.expression(operand)
            return None
        if isinstance(expr, Literal):
            return None
        raise TypeError(f"unexpected expression node {type(expr).__name__}")

    def name(self, expr: Name) -> Optional[str]:
        declared = self.local(expr.identifier)
        if declared is not None:
            return declared
        found = self.model.find_field(self.fqn, expr.identifier)
        if found is None:
            return None
        self.attributes.add(expr.identifier)
        return found[1].declared_type

    def static_type(self, expr: Expr) -> Optional[str]:
        """Type named by a bare capitalised identifier that is neither a local nor a field."""
        if (
            isinstance(expr, Name)
            and not self.is_local(expr.identifier)
            and not self.is_field(expr.identifier)
            and expr.identifier[:1].isupper()
        ):
            return self.resolve(expr.identifier)
        return None

    def field_access(self, expr: FieldAccess) -> Optional[str]:
        if isinstance(expr.target, (This, Super)):
            owner = self.fqn if isinstance(expr.target, This) else self.entry.superclass
            found = self.model.find_field(owner, expr.name) if owner else None
            if found is None:
                return None
            self.attributes.add(expr.name)
            return found[1].declared_type

        owner = self.static_type(expr.target)
        if owner is None:
            owner = self.expression(expr.target)
        if not self.builder.is_internal(owner):
            return None
        found = self.model.find_field(owner, expr.name)
        return found[1].declared_type if found else None

    def call(self, expr: Call) -> Optional[str]:
        for arg in expr.args:
            self.expression(arg)
        receiver = expr.receiver

        if receiver is None or isinstance(receiver, This):
            return self.call_on(self.fqn, expr)
        if isinstance(receiver, Super):
            if self.entry.superclass is None:
                return self.unresolved(expr, f"{self.fqn} has no superclass")
            return self.call_on(self.entry.superclass, expr)
        if isinstance(receiver, Name) and not self.is_local(receiver.identifier) and not self.is_field(receiver.identifier):
            owner = self.static_type(receiver)
            if owner is None:
                return self.unresolved(expr, f"unknown receiver '{receiver.identifier}'")
            return self.call_on(owner, expr)
        if isinstance(receiver, Call):
            owner = self.expression(receiver)
            # chains continue only through in-corpus return types
            if self.builder.is_internal(owner):
                return self.call_on(owner, expr)
            return None

        owner = self.expression(receiver)
        if owner is None or is_primitive(owner):
            return self.unresolved(expr, "the receiver's type is unknown")
        return self.call_on(owner, expr)

    def call_on(self, owner: str, expr: Call) -> Optional[str]:
        arity = len(expr.args)
        if not self.builder.is_internal(owner):
            self.calls.add(CallSite(target_class=self.builder.use(owner), target_method=expr.name, arity=arity, resolved=True))
            return None

        declaring = self.model.find_method(owner, expr.name, arity)
        if declaring is not None:
            self.calls.add(CallSite(target_class=declaring, target_method=expr.name, arity=arity, resolved=True))
            return self.model.get(declaring).method(expr.name, arity).return_type

        external = self.model.external_ancestor(owner)
        if external is not None:
            self.calls.add(CallSite(target_class=self.builder.use(external), target_method=expr.name, arity=arity, resolved=True))
            return None
        return self.unresolved(expr, f"no method {expr.name}/{arity} in {owner} or its ancestors")

    def unresolved(self, expr: Call, reason: str) -> None:
        arity = len(expr.args)
        self.calls.add(CallSite(target_class=UNRESOLVED, target_method=expr.name, arity=arity, resolved=False))
        self.builder.warn(expr.location, f"unresolved call {expr.name}/{arity}: {reason}")
        return None

    def constructor_call(self, expr: ConstructorCall) -> None:
        for arg in expr.args:
            self.expression(arg)
        arity = len(expr.args)

        if expr.kind == "this":
            target = self.fqn
        else:
            target = self.entry.superclass
            if target is None:
                return

        if not self.builder.is_internal(target):
            self.calls.add(CallSite(target_class=self.builder.use(target), target_method=simple_name(target), arity=arity, resolved=True))
            return

        info = self.model.get(target)
        constructor = simple_name(target)
        if info.method(constructor, arity) is not None:
            self.calls.add(CallSite(target_class=target, target_method=constructor, arity=arity, resolved=True))
        elif arity == 0 and not any(info.is_constructor(m) for m in info.methods):
            return  # implicit default constructor
        else:
            self.calls.add(CallSite(target_class=UNRESOLVED, target_method=constructor, arity=arity, resolved=False))
            self.builder.warn(expr.location, f"unresolved call {expr.kind}(...)/{arity}: no such constructor in {target}")


def build_model(units: Iterable[SyntaxUnit], diagnostics: Iterable[Diagnostic] = ()) -> ClassModel:
    """
    Merge SyntaxUnits into a valid ClassModel.

    The result does not depend on the order of ``units``. Duplicate FQNs keep
    the first declaration in file-path order; an ``extends``/``implements``
    edge that would close an inheritance cycle is dropped. Both are reported
    as error diagnostics in ``ClassModel.resolution_diagnostics``, together
    with the units' own diagnostics and any extra ``diagnostics`` given.
    """
    model = ModelBuilder(units).build()
    extra = list(diagnostics)
    if not extra:
        return model
    merged = sorted(
        extra + list(model.resolution_diagnostics),
        key=lambda d: (d.location.file, d.location.line, d.location.column),
    )
    return ClassModel(classes=model.classes, resolution_diagnostics=tuple(merged))

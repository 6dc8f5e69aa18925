"""
Syntax tree for one source file.

Declarations keep their source locations and their types as written; name
resolution happens later, in ``build_model``. Method bodies are kept only in
as much detail as fact extraction needs (which names are read or written,
which methods are called on what).
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from ..models.class_model import Diagnostic, SourceLocation


@dataclass(frozen=True)
class TypeRef:
    """A type as written, generic arguments and array brackets removed."""

    name: str
    location: SourceLocation


# Expressions

@dataclass(frozen=True)
class Name:
    identifier: str
    location: SourceLocation


@dataclass(frozen=True)
class This:
    location: SourceLocation


@dataclass(frozen=True)
class Super:
    location: SourceLocation


@dataclass(frozen=True)
class Literal:
    location: SourceLocation


@dataclass(frozen=True)
class FieldAccess:
    target: "Expr"
    name: str
    location: SourceLocation


@dataclass(frozen=True)
class Call:
    receiver: Optional["Expr"]
    name: str
    args: Tuple["Expr", ...]
    location: SourceLocation


@dataclass(frozen=True)
class ConstructorCall:
    """``this(...)`` or ``super(...)`` as the first statement of a constructor."""

    kind: str
    args: Tuple["Expr", ...]
    location: SourceLocation


@dataclass(frozen=True)
class New:
    type: TypeRef
    args: Tuple["Expr", ...]
    location: SourceLocation


@dataclass(frozen=True)
class Cast:
    type: TypeRef
    operand: "Expr"
    location: SourceLocation


@dataclass(frozen=True)
class Operation:
    """Any operator application (unary, binary, ternary, assignment, indexing, array initialiser)."""

    operands: Tuple["Expr", ...]
    location: SourceLocation


Expr = Union[Name, This, Super, Literal, FieldAccess, Call, ConstructorCall, New, Cast, Operation]


# Statements

@dataclass(frozen=True)
class LocalDecl:
    type: TypeRef
    names: Tuple[Tuple[str, Optional[Expr]], ...]
    location: SourceLocation


@dataclass(frozen=True)
class ExprStmt:
    expr: Expr
    location: SourceLocation


@dataclass(frozen=True)
class Return:
    value: Optional[Expr]
    location: SourceLocation


@dataclass(frozen=True)
class If:
    condition: Expr
    then: "Stmt"
    otherwise: Optional["Stmt"]
    location: SourceLocation


@dataclass(frozen=True)
class While:
    condition: Expr
    body: "Stmt"
    location: SourceLocation


@dataclass(frozen=True)
class Block:
    statements: Tuple["Stmt", ...]
    location: SourceLocation


Stmt = Union[LocalDecl, ExprStmt, Return, If, While, Block]


# Declarations

@dataclass(frozen=True)
class ParamDecl:
    type: TypeRef
    name: str
    location: SourceLocation


@dataclass(frozen=True)
class FieldDecl:
    type: TypeRef
    name: str
    location: SourceLocation
    is_static: bool = False


@dataclass(frozen=True)
class MethodDecl:
    name: str
    return_type: Optional[TypeRef]  # None for constructors
    params: Tuple[ParamDecl, ...]
    body: Optional[Block]  # None for abstract and interface methods
    location: SourceLocation
    has_errors: bool = False

    @property
    def is_constructor(self) -> bool:
        return self.return_type is None

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass(frozen=True)
class TypeDecl:
    kind: str  # "class" or "interface"
    name: str
    extends: Tuple[TypeRef, ...]
    implements: Tuple[TypeRef, ...]
    fields: Tuple[FieldDecl, ...]
    methods: Tuple[MethodDecl, ...]
    location: SourceLocation


@dataclass(frozen=True)
class SyntaxUnit:
    """Everything parsed from one file, plus the diagnostics raised while doing so."""

    file: str
    package: str = ""
    imports: Tuple[str, ...] = ()
    type_decls: Tuple[TypeDecl, ...] = ()
    diagnostics: Tuple[Diagnostic, ...] = field(default=())

    @property
    def has_errors(self) -> bool:
        return any(d.is_error for d in self.diagnostics)

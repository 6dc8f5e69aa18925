"""
Recursive-descent parser for the Java-like source subset.

Recognised: a package declaration, single-type imports, top-level classes and
interfaces with ``extends``/``implements``, fields, constructors and methods
whose bodies hold local declarations, expression statements (assignments and
calls), ``return``, ``if``/``else`` and ``while`` with nested blocks.

Constructs outside the subset (annotations, generic arguments, nested types,
initializer blocks, ``for``/``do``/``switch``/``try`` and friends) produce a
warning and are skipped. Lambdas, method references and anonymous classes are
syntax errors. Errors inside a method body flag that method and parsing
resumes after its closing brace; errors between members resume at the next
member; errors at file level resume at the next type declaration.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from ..models.class_model import PRIMITIVE_TYPES, Diagnostic
from .syntax import (
    Block,
    Call,
    Cast,
    ConstructorCall,
    Expr,
    ExprStmt,
    FieldAccess,
    FieldDecl,
    If,
    Literal,
    LocalDecl,
    MethodDecl,
    Name,
    New,
    Operation,
    ParamDecl,
    Return,
    Stmt,
    Super,
    SyntaxUnit,
    This,
    TypeDecl,
    TypeRef,
    While,
)
from .tokenizer import Token, TokenKind, lexical_diagnostics, tokenize

logger = logging.getLogger(__name__)

MODIFIERS = frozenset({
    "public", "private", "protected", "static", "final", "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default",
})

UNSUPPORTED_STATEMENTS = frozenset({
    "for", "do", "switch", "try", "throw", "synchronized", "assert",
})

ASSIGNMENT_OPERATORS = frozenset({
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=",
})

BINARY_OPERATORS = frozenset({
    "||", "&&", "|", "^", "&", "==", "!=", "<", ">", "<=", ">=", "<<",
    "+", "-", "*", "/", "%",
})

PREFIX_OPERATORS = frozenset({"+", "-", "!", "~", "++", "--"})

LITERAL_KEYWORDS = frozenset({"true", "false", "null"})

TYPE_KEYWORDS = frozenset({"class", "interface", "enum"})


class ParseError(Exception):
    """Raised inside the parser and always caught at a recovery point."""

    def __init__(self, token: Token, message: str):
        self.token = token
        self.message = message
        super().__init__(message)


class Parser:
    """Parses one token list into a SyntaxUnit."""

    def __init__(self, tokens: List[Token]):
        self.diagnostics: List[Diagnostic] = lexical_diagnostics(tokens)
        self.tokens = [t for t in tokens if t.kind not in (TokenKind.COMMENT, TokenKind.ERROR)]
        if not self.tokens or self.tokens[-1].kind != TokenKind.EOF:
            raise ValueError("token stream must end with an EOF token")
        self.file = self.tokens[-1].location.file
        self.pos = 0
        self.braces = self._pair_braces()

    # Token helpers

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != TokenKind.EOF:
            self.pos += 1
        return token

    def at(self, *texts: str) -> bool:
        return self.peek().is_(*texts)

    def at_eof(self) -> bool:
        return self.peek().kind == TokenKind.EOF

    def accept(self, *texts: str) -> Optional[Token]:
        return self.advance() if self.at(*texts) else None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise ParseError(self.peek(), f"expected '{text}', found {self._describe(self.peek())}")
        return self.advance()

    def expect_identifier(self) -> Token:
        if self.peek().kind != TokenKind.IDENTIFIER:
            raise ParseError(self.peek(), f"expected an identifier, found {self._describe(self.peek())}")
        return self.advance()

    @staticmethod
    def _describe(token: Token) -> str:
        return "end of file" if token.kind == TokenKind.EOF else f"'{token.text}'"

    def warn(self, token: Token, message: str) -> None:
        self.diagnostics.append(Diagnostic.warning(token.location, message))

    def error(self, token: Token, message: str) -> None:
        self.diagnostics.append(Diagnostic.error(token.location, message))

    def _pair_braces(self) -> Dict[int, int]:
        """Index of the closing brace for every opening brace; EOF when never closed."""
        pairs: Dict[int, int] = {}
        stack: List[int] = []
        for index, token in enumerate(self.tokens):
            if token.is_("{"):
                stack.append(index)
            elif token.is_("}"):
                if stack:
                    pairs[stack.pop()] = index
                else:
                    self.error(token, "unmatched '}'")
        eof = len(self.tokens) - 1
        for index in stack:
            pairs[index] = eof
            self.error(self.tokens[index], "unbalanced braces: '{' is never closed")
        return pairs

    def skip_block(self) -> None:
        self.pos = min(self.braces[self.pos] + 1, len(self.tokens) - 1)

    def skip_parens(self) -> None:
        depth = 0
        while not self.at_eof():
            token = self.advance()
            if token.is_("("):
                depth += 1
            elif token.is_(")"):
                depth -= 1
                if depth == 0:
                    return

    # File level

    def parse_unit(self) -> SyntaxUnit:
        package = ""
        imports: List[str] = []

        if self.at("package"):
            try:
                self.advance()
                package = self.qualified_name()
                self.expect(";")
            except ParseError as e:
                self.error(e.token, e.message)
                self.recover_statement()

        while self.at("import"):
            try:
                keyword = self.advance()
                is_static = self.accept("static") is not None
                name = self.qualified_name(allow_wildcard=True)
                self.expect(";")
                if name.endswith(".*"):
                    self.warn(keyword, f"wildcard import '{name}' is not supported; ignored")
                elif is_static:
                    self.warn(keyword, f"static import '{name}' is not supported; ignored")
                else:
                    imports.append(name)
            except ParseError as e:
                self.error(e.token, e.message)
                self.recover_statement()

        type_decls: List[TypeDecl] = []
        while not self.at_eof():
            if self.accept(";"):
                continue
            if self.at("}"):
                self.advance()  # reported while pairing braces
                continue
            try:
                decl = self.type_declaration()
                if decl is not None:
                    type_decls.append(decl)
            except ParseError as e:
                self.error(e.token, e.message)
                self.recover_top_level()

        self.diagnostics.sort(key=lambda d: (d.location.line, d.location.column))
        logger.debug(
            f"Parsed {self.file}: {len(self.tokens)} tokens, {len(type_decls)} type declarations, "
            f"{len(self.diagnostics)} diagnostics"
        )
        return SyntaxUnit(
            file=self.file,
            package=package,
            imports=tuple(imports),
            type_decls=tuple(type_decls),
            diagnostics=tuple(self.diagnostics),
        )

    def qualified_name(self, allow_wildcard: bool = False) -> str:
        parts = [self.expect_identifier().text]
        while self.at("."):
            self.advance()
            if allow_wildcard and self.at("*"):
                self.advance()
                parts.append("*")
                break
            parts.append(self.expect_identifier().text)
        return ".".join(parts)

    def recover_statement(self) -> None:
        while not self.at_eof():
            if self.accept(";"):
                return
            if self.at("{", "}"):
                return
            self.advance()

    def recover_top_level(self) -> None:
        while not self.at_eof():
            if self.at(*TYPE_KEYWORDS):
                return
            if self.at("{"):
                self.skip_block()
                continue
            self.advance()

    def skip_unsupported_type(self, token: Token, what: str) -> None:
        self.warn(token, f"{what} are not supported; skipped")
        while not self.at_eof() and not self.at("{", ";"):
            self.advance()
        if self.at("{"):
            self.skip_block()
        else:
            self.accept(";")

    # Declarations

    def modifiers(self) -> Set[str]:
        found: Set[str] = set()
        while True:
            token = self.peek()
            if token.kind == TokenKind.KEYWORD and token.text in MODIFIERS:
                found.add(self.advance().text)
            elif token.is_("@") and not self.peek(1).is_("interface"):
                self.advance()
                name = self.qualified_name()
                self.warn(token, f"annotation '@{name}' is not supported; ignored")
                if self.at("("):
                    self.skip_parens()
            else:
                return found

    def type_declaration(self) -> Optional[TypeDecl]:
        self.modifiers()
        start = self.peek()
        if start.is_("@") or start.is_("enum"):
            self.skip_unsupported_type(start, "enum and annotation declarations")
            return None
        if not self.at("class", "interface"):
            raise ParseError(start, f"expected a class or interface declaration, found {self._describe(start)}")

        kind = self.advance().text
        name = self.expect_identifier()
        if self.at("<"):
            self.skip_type_arguments()

        extends: Tuple[TypeRef, ...] = ()
        implements: Tuple[TypeRef, ...] = ()
        if self.accept("extends"):
            extends = self.type_list()
        if self.accept("implements"):
            implements = self.type_list()

        if not self.at("{"):
            raise ParseError(self.peek(), f"expected '{{' to open {kind} {name.text}, found {self._describe(self.peek())}")
        fields, methods = self.class_body(name.text)
        return TypeDecl(
            kind=kind,
            name=name.text,
            extends=extends,
            implements=implements,
            fields=tuple(fields),
            methods=tuple(methods),
            location=start.location,
        )

    def type_list(self) -> Tuple[TypeRef, ...]:
        types = [self.type_ref()]
        while self.accept(","):
            types.append(self.type_ref())
        return tuple(types)

    def class_body(self, class_name: str) -> Tuple[List[FieldDecl], List[MethodDecl]]:
        end = self.braces[self.pos]
        self.advance()
        fields: List[FieldDecl] = []
        methods: List[MethodDecl] = []
        while self.pos < end:
            if self.accept(";"):
                continue
            try:
                self.member(class_name, fields, methods)
            except ParseError as e:
                self.error(e.token, e.message)
                self.recover_member(end)
        self.pos = end
        self.accept("}")
        return fields, methods

    def recover_member(self, end: int) -> None:
        while self.pos < end:
            if self.accept(";"):
                return
            if self.at("{"):
                self.skip_block()
                return
            if self.at("("):
                self.skip_parens()
                continue
            self.advance()

    def member(self, class_name: str, fields: List[FieldDecl], methods: List[MethodDecl]) -> None:
        found = self.modifiers()
        token = self.peek()

        if token.is_("{"):
            self.warn(token, "initializer blocks are not supported; skipped")
            self.skip_block()
            return
        if token.kind == TokenKind.KEYWORD and token.text in TYPE_KEYWORDS or token.is_("@"):
            self.skip_unsupported_type(token, "nested type declarations")
            return
        if token.is_("<"):
            self.skip_type_arguments()
            token = self.peek()

        if token.kind == TokenKind.IDENTIFIER and token.text == class_name and self.peek(1).is_("("):
            self.advance()
            methods.append(self.method_rest(token, None))
            return

        declared = self.type_ref()
        name = self.expect_identifier()
        if self.at("("):
            methods.append(self.method_rest(name, declared))
            return

        while True:
            fields.append(FieldDecl(declared, name.text, name.location, "static" in found))
            while self.accept("["):
                self.expect("]")
            if self.accept("="):
                self.variable_initializer()  # initialiser facts belong to no method
            if not self.accept(","):
                break
            name = self.expect_identifier()
        self.expect(";")

    def method_rest(self, name: Token, return_type: Optional[TypeRef]) -> MethodDecl:
        self.expect("(")
        params: List[ParamDecl] = []
        if not self.at(")"):
            while True:
                self.modifiers()
                declared = self.type_ref()
                self.accept("...")
                param = self.expect_identifier()
                while self.accept("["):
                    self.expect("]")
                params.append(ParamDecl(declared, param.text, param.location))
                if not self.accept(","):
                    break
        self.expect(")")
        while self.accept("["):
            self.expect("]")
        if self.accept("throws"):
            self.type_list()

        body: Optional[Block] = None
        has_errors = False
        if not self.accept(";"):
            if not self.at("{"):
                raise ParseError(self.peek(), f"expected '{{' or ';' after {name.text}(...), found {self._describe(self.peek())}")
            body, has_errors = self.method_body()
        return MethodDecl(
            name=name.text,
            return_type=return_type,
            params=tuple(params),
            body=body,
            location=name.location,
            has_errors=has_errors,
        )

    def method_body(self) -> Tuple[Block, bool]:
        opening = self.peek()
        end = self.braces[self.pos]
        self.advance()
        statements: List[Stmt] = []
        has_errors = self.tokens[end].kind == TokenKind.EOF
        try:
            while self.pos < end:
                statement = self.statement()
                if statement is not None:
                    statements.append(statement)
        except ParseError as e:
            self.error(e.token, e.message)
            has_errors = True
        self.pos = end
        self.accept("}")
        return Block(tuple(statements), opening.location), has_errors

    # Types

    def type_ref(self) -> TypeRef:
        token = self.peek()
        if token.kind == TokenKind.KEYWORD and token.text in PRIMITIVE_TYPES:
            self.advance()
            parts = [token.text]
        elif token.kind == TokenKind.IDENTIFIER:
            parts = [self.advance().text]
            while True:
                if self.at("<"):
                    self.skip_type_arguments()
                if self.at(".") and self.peek(1).kind == TokenKind.IDENTIFIER:
                    self.advance()
                    parts.append(self.advance().text)
                    continue
                break
        else:
            raise ParseError(token, f"expected a type, found {self._describe(token)}")
        while self.at("[") and self.peek(1).is_("]"):
            self.advance()
            self.advance()
        return TypeRef(".".join(parts), token.location)

    def skip_type_arguments(self) -> None:
        opening = self.expect("<")
        depth = 1
        while depth:
            token = self.peek()
            if token.kind == TokenKind.EOF or token.is_(";", "{", "}", ")"):
                raise ParseError(opening, "unclosed '<' in generic type arguments")
            self.advance()
            if token.is_("<"):
                depth += 1
            elif token.is_(">"):
                depth -= 1
        self.warn(opening, "generic type arguments are not supported; ignored")

    # Statements

    def statement(self) -> Optional[Stmt]:
        token = self.peek()

        if token.is_("{"):
            return self.block()
        if token.is_(";"):
            self.advance()
            return None
        if token.is_("if"):
            self.advance()
            self.expect("(")
            condition = self.expression()
            self.expect(")")
            then = self.statement() or Block((), token.location)
            otherwise = None
            if self.accept("else"):
                otherwise = self.statement() or Block((), token.location)
            return If(condition, then, otherwise, token.location)
        if token.is_("while"):
            self.advance()
            self.expect("(")
            condition = self.expression()
            self.expect(")")
            body = self.statement() or Block((), token.location)
            return While(condition, body, token.location)
        if token.is_("return"):
            self.advance()
            value = None if self.at(";") else self.expression()
            self.expect(";")
            return Return(value, token.location)
        if token.is_("break", "continue"):
            self.advance()
            if self.peek().kind == TokenKind.IDENTIFIER:
                self.advance()
            self.expect(";")
            return None
        if token.kind == TokenKind.KEYWORD and token.text in UNSUPPORTED_STATEMENTS:
            self.warn(token, f"'{token.text}' statements are not supported; skipped")
            self.skip_statement()
            return None
        if token.kind == TokenKind.KEYWORD and token.text in TYPE_KEYWORDS:
            self.skip_unsupported_type(token, "local type declarations")
            return None
        if self.looks_like_local_decl():
            return self.local_decl()

        expr = self.expression()
        self.expect(";")
        return ExprStmt(expr, token.location)

    def block(self) -> Block:
        opening = self.peek()
        end = self.braces[self.pos]
        self.advance()
        statements: List[Stmt] = []
        while self.pos < end:
            statement = self.statement()
            if statement is not None:
                statements.append(statement)
        if self.pos != end:
            raise ParseError(self.peek(), "statement runs past the end of its block")
        if not self.accept("}"):
            raise ParseError(self.peek(), "unexpected end of file inside a block")
        return Block(tuple(statements), opening.location)

    def skip_statement(self) -> None:
        keyword = self.advance().text
        while not self.at_eof():
            if self.accept(";"):
                return
            if self.at("("):
                self.skip_parens()
                continue
            if self.at("{"):
                self.skip_block()
                if self.at("catch", "finally") or (keyword == "do" and self.at("while")):
                    continue
                return
            if self.at("}"):
                return
            self.advance()

    def _speculate(self, probe) -> bool:
        """Run ``probe`` without consuming tokens or keeping diagnostics."""
        saved_pos, saved_count = self.pos, len(self.diagnostics)
        try:
            return bool(probe())
        except ParseError:
            return False
        finally:
            self.pos = saved_pos
            del self.diagnostics[saved_count:]

    def looks_like_local_decl(self) -> bool:
        def probe() -> bool:
            if self.modifiers():
                return True
            self.type_ref()
            return self.peek().kind == TokenKind.IDENTIFIER and self.peek(1).is_("=", ";", ",", "[")
        return self._speculate(probe)

    def local_decl(self) -> LocalDecl:
        start = self.peek()
        self.modifiers()
        declared = self.type_ref()
        names = []
        while True:
            name = self.expect_identifier()
            while self.accept("["):
                self.expect("]")
            initial = self.variable_initializer() if self.accept("=") else None
            names.append((name.text, initial))
            if not self.accept(","):
                break
        self.expect(";")
        return LocalDecl(declared, tuple(names), start.location)

    # Expressions

    def expression(self) -> Expr:
        left = self.conditional()
        operator = self.assignment_operator()
        if operator is not None:
            right = self.expression()
            return Operation((left, right), operator.location)
        return left

    def _adjacent(self, *texts: str) -> bool:
        """True when the next tokens spell ``texts`` with no whitespace between them."""
        for offset, text in enumerate(texts):
            token = self.peek(offset)
            if not token.is_(text) or (offset and token.leading_trivia):
                return False
        return True

    def assignment_operator(self) -> Optional[Token]:
        if self.peek().kind == TokenKind.PUNCTUATION and self.peek().text in ASSIGNMENT_OPERATORS:
            return self.advance()
        for spelling in ((">", ">="), (">", ">", ">=")):
            if self._adjacent(*spelling):
                first = self.advance()
                for _ in spelling[1:]:
                    self.advance()
                return first
        return None

    def conditional(self) -> Expr:
        condition = self.binary()
        question = self.accept("?")
        if question is None:
            return condition
        when_true = self.expression()
        self.expect(":")
        when_false = self.conditional()
        return Operation((condition, when_true, when_false), question.location)

    def binary(self) -> Expr:
        start = self.peek()
        operands = [self.unary()]
        while True:
            if self.accept("instanceof"):
                self.modifiers()
                self.type_ref()
                if self.peek().kind == TokenKind.IDENTIFIER:
                    self.advance()
                continue
            if self.binary_operator():
                operands.append(self.unary())
                continue
            break
        if len(operands) == 1:
            return operands[0]
        return Operation(tuple(operands), start.location)

    def binary_operator(self) -> bool:
        token = self.peek()
        if token.kind != TokenKind.PUNCTUATION or token.text not in BINARY_OPERATORS:
            return False
        if self._adjacent(">", ">=") or self._adjacent(">", ">", ">="):
            return False
        self.advance()
        if token.text == ">":
            # '>>' and '>>>' arrive as separate '>' tokens
            while self.at(">") and not self.peek().leading_trivia and not self._adjacent(">", ">="):
                self.advance()
        return True

    def unary(self) -> Expr:
        token = self.peek()
        if token.kind == TokenKind.PUNCTUATION and token.text in PREFIX_OPERATORS:
            self.advance()
            return Operation((self.unary(),), token.location)
        if token.is_("(") and self.looks_like_cast():
            self.advance()
            declared = self.type_ref()
            self.expect(")")
            return Cast(declared, self.unary(), token.location)
        return self.postfix()

    def looks_like_cast(self) -> bool:
        def probe() -> bool:
            self.advance()
            primitive = self.peek().kind == TokenKind.KEYWORD and self.peek().text in PRIMITIVE_TYPES
            self.type_ref()
            if not self.accept(")"):
                return False
            if primitive:
                return True
            following = self.peek()
            return (
                following.kind in (TokenKind.IDENTIFIER, TokenKind.STRING, TokenKind.NUMBER)
                or following.is_("this", "super", "new", "(", "!", "~")
                or following.is_(*LITERAL_KEYWORDS)
            )
        return self._speculate(probe)

    def postfix(self) -> Expr:
        expr = self.primary()
        while True:
            if self.at("."):
                self.advance()
                if self.at("<"):
                    self.skip_type_arguments()
                token = self.peek()
                if token.is_("new"):
                    raise ParseError(token, "qualified instance creation is not supported")
                if token.is_("this"):
                    self.advance()
                    expr = This(token.location)
                    continue
                if token.is_("class"):
                    self.advance()
                    expr = Literal(token.location)
                    continue
                name = self.expect_identifier()
                if self.at("("):
                    expr = Call(expr, name.text, self.arguments(), name.location)
                else:
                    expr = FieldAccess(expr, name.text, name.location)
            elif self.at("["):
                token = self.advance()
                index = self.expression()
                self.expect("]")
                expr = Operation((expr, index), token.location)
            elif self.at("++", "--"):
                expr = Operation((expr,), self.advance().location)
            elif self.at("::"):
                raise ParseError(self.peek(), "method references are not supported")
            else:
                return expr

    def primary(self) -> Expr:
        token = self.peek()

        if token.kind in (TokenKind.STRING, TokenKind.NUMBER) or token.is_(*LITERAL_KEYWORDS):
            self.advance()
            return Literal(token.location)
        if token.is_("this", "super"):
            self.advance()
            if self.at("("):
                return ConstructorCall(token.text, self.arguments(), token.location)
            return This(token.location) if token.text == "this" else Super(token.location)
        if token.is_("new"):
            return self.creation()
        if token.is_("("):
            if self.lambda_ahead():
                raise ParseError(token, "lambda expressions are not supported")
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if token.kind == TokenKind.IDENTIFIER:
            if self.peek(1).is_("->"):
                raise ParseError(token, "lambda expressions are not supported")
            self.advance()
            if self.at("("):
                return Call(None, token.text, self.arguments(), token.location)
            return Name(token.text, token.location)
        raise ParseError(token, f"unexpected {self._describe(token)} in expression")

    def lambda_ahead(self) -> bool:
        def probe() -> bool:
            self.skip_parens()
            return self.at("->")
        return self._speculate(probe)

    def creation(self) -> New:
        keyword = self.advance()
        declared = self.type_ref()
        if self.at("("):
            args = self.arguments()
            if self.at("{"):
                raise ParseError(self.peek(), "anonymous classes are not supported")
            return New(declared, args, keyword.location)
        dimensions: List[Expr] = []
        while self.accept("["):
            if not self.at("]"):
                dimensions.append(self.expression())
            self.expect("]")
        if self.at("{"):
            dimensions.append(self.array_initializer())
        if not dimensions and not self.tokens[self.pos - 1].is_("]"):
            raise ParseError(self.peek(), f"expected '(' or '[' after new {declared.name}")
        return New(declared, tuple(dimensions), keyword.location)

    def arguments(self) -> Tuple[Expr, ...]:
        self.expect("(")
        args: List[Expr] = []
        if not self.at(")"):
            args.append(self.expression())
            while self.accept(","):
                args.append(self.expression())
        self.expect(")")
        return tuple(args)

    def array_initializer(self) -> Operation:
        opening = self.expect("{")
        elements: List[Expr] = []
        while not self.at("}"):
            elements.append(self.variable_initializer())
            if not self.accept(","):
                break
        self.expect("}")
        return Operation(tuple(elements), opening.location)

    def variable_initializer(self) -> Expr:
        return self.array_initializer() if self.at("{") else self.expression()


def parse_unit(tokens: List[Token]) -> SyntaxUnit:
    """
    Parse a token list (as produced by ``tokenize``) into a SyntaxUnit.

    Never raises on malformed input: problems are returned in
    ``SyntaxUnit.diagnostics`` and whatever could be recovered is kept.
    """
    return Parser(tokens).parse_unit()


def parse_source(source: str, file: str = "<source>") -> SyntaxUnit:
    """Tokenize and parse one file."""
    return parse_unit(tokenize(source, file))

"""
Tokenizer for the Java-like source subset.

A single master regular expression splits the input into whitespace (kept as
``leading_trivia`` on the following token), comments, literals, identifiers,
keywords and punctuation. Nothing is ever dropped: joining
``leading_trivia + text`` over the token list, the final EOF token included,
reproduces the source exactly.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from ..models.class_model import Diagnostic, SourceLocation


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    PUNCTUATION = "punctuation"
    STRING = "string-literal"
    NUMBER = "number-literal"
    COMMENT = "comment"
    ERROR = "error"
    EOF = "eof"


KEYWORDS = frozenset({
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "false", "final", "finally", "float", "for", "goto", "if",
    "implements", "import", "instanceof", "int", "interface", "long", "native",
    "new", "null", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "true", "try", "void", "volatile", "while",
})

# '>' is never merged into '>>' so that nested generic arguments close one
# bracket per token; shift operators are reassembled by the parser.
_TOKEN_PATTERN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<line_comment>//[^\n]*)
  | (?P<block_comment>/\*.*?\*/)
  | (?P<open_comment>/\*.*\Z)
  | (?P<string>"(?:[^"\\\n]|\\.)*"|'(?:[^'\\\n]|\\.)*')
  | (?P<open_string>"(?:[^"\\\n]|\\.)*|'(?:[^'\\\n]|\\.)*)
  | (?P<number>0[xX][0-9a-fA-F_]+[lL]?|(?:\d[\d_]*(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?[lLfFdD]?)
  | (?P<word>(?:[^\W\d]|\$)(?:\w|\$)*)
  | (?P<punct>\.\.\.|->|::|\+\+|--|&&|\|\||<<=?|[=!<>+\-*/%&|^]=|[{}()\[\];,.@=<>!~?:+\-*/%&|^])
  | (?P<other>.)
    """,
    re.VERBOSE | re.DOTALL,
)

_ERROR_MESSAGES = {
    "open_comment": "unterminated block comment",
    "open_string": "unterminated string literal",
    "other": "unexpected character",
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    location: SourceLocation
    leading_trivia: str = ""

    @property
    def line(self) -> int:
        return self.location.line

    @property
    def column(self) -> int:
        return self.location.column

    def is_(self, *texts: str) -> bool:
        """True for a keyword or punctuation token spelled as one of ``texts``."""
        return self.kind in (TokenKind.KEYWORD, TokenKind.PUNCTUATION) and self.text in texts

    def __str__(self) -> str:
        return f"{self.kind.value}({self.text!r})@{self.line}:{self.column}"


def tokenize(source: str, file: str = "<source>") -> List[Token]:
    """
    Split ``source`` into a full-fidelity token list ending in an EOF token.

    Lexical problems never raise: an unterminated comment or string, or a
    character outside the language, becomes an ERROR token (see
    ``lexical_diagnostics``).
    """
    tokens: List[Token] = []
    trivia: List[str] = []
    line, column = 1, 1
    position = 0

    while position < len(source):
        match = _TOKEN_PATTERN.match(source, position)
        group = match.lastgroup
        text = match.group()

        if group == "ws":
            trivia.append(text)
        else:
            if group in ("line_comment", "block_comment"):
                kind = TokenKind.COMMENT
            elif group in _ERROR_MESSAGES:
                kind = TokenKind.ERROR
            elif group == "string":
                kind = TokenKind.STRING
            elif group == "number":
                kind = TokenKind.NUMBER
            elif group == "word":
                kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
            else:
                kind = TokenKind.PUNCTUATION
            location = SourceLocation(file=file, line=line, column=column)
            tokens.append(Token(kind, text, location, "".join(trivia)))
            trivia = []

        newlines = text.count("\n")
        if newlines:
            line += newlines
            column = len(text) - text.rfind("\n")
        else:
            column += len(text)
        position = match.end()

    tokens.append(Token(TokenKind.EOF, "", SourceLocation(file=file, line=line, column=column), "".join(trivia)))
    return tokens


def lexical_diagnostics(tokens: List[Token]) -> List[Diagnostic]:
    """One error diagnostic per ERROR token."""
    problems = []
    for token in tokens:
        if token.kind != TokenKind.ERROR:
            continue
        if token.text.startswith("/*"):
            message = _ERROR_MESSAGES["open_comment"]
        elif token.text[:1] in ("\"", "'"):
            message = _ERROR_MESSAGES["open_string"]
        else:
            message = f"{_ERROR_MESSAGES['other']} {token.text!r}"
        problems.append(Diagnostic.error(token.location, message))
    return problems


def reconstruct(tokens: List[Token]) -> str:
    """Inverse of ``tokenize``."""
    return "".join(token.leading_trivia + token.text for token in tokens)

"""
Source parser for ckmetrics.

Lexes, parses and resolves a Java-like source subset into a ClassModel.
"""

from .tokenizer import Token, TokenKind, tokenize, lexical_diagnostics, reconstruct
from .syntax import SyntaxUnit, TypeDecl, MethodDecl, FieldDecl, ParamDecl, TypeRef
from .parser import parse_unit, parse_source
from .builder import build_model
from .walker import analyze_paths, analyze_sources, discover_files

__all__ = [
    "Token",
    "TokenKind",
    "tokenize",
    "lexical_diagnostics",
    "reconstruct",
    "SyntaxUnit",
    "TypeDecl",
    "MethodDecl",
    "FieldDecl",
    "ParamDecl",
    "TypeRef",
    "parse_unit",
    "parse_source",
    "build_model",
    "analyze_paths",
    "analyze_sources",
    "discover_files",
]

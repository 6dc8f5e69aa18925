"""
Exception hierarchy for ckmetrics.

Problems found in the analysed sources never raise: they are collected as
``Diagnostic`` objects. The exceptions below are reserved for misuse of the
library surface and for inputs the pipeline cannot continue with. Each class
carries the process exit code the CLI maps it to.
"""

from typing import List, Optional


class CkmError(Exception):
    """Base class for every error raised by ckmetrics."""

    exit_code: int = 2

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class NotFoundError(CkmError):
    """A class or package is unknown, or is an external stub where a parsed class is required."""


class AnalysisError(CkmError):
    """The model cannot be measured, e.g. the inheritance graph contains a cycle."""

    def __init__(self, message: str, cycle: Optional[List[str]] = None):
        self.cycle = cycle or []
        super().__init__(message)


class ModelFormatError(CkmError):
    """A model document is not well-formed."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class InvalidModelError(CkmError):
    """A model violates the class-model invariants."""

    def __init__(self, message: str, diagnostics: list):
        self.diagnostics = diagnostics
        details = "; ".join(d.message for d in diagnostics[:5])
        if len(diagnostics) > 5:
            details += f"; ... ({len(diagnostics) - 5} more)"
        super().__init__(f"{message}: {details}" if details else message)


class ConfigError(CkmError):
    """Invalid configuration: rules file, metric names, flags or environment."""


class InputPathError(CkmError):
    """An input path given for analysis does not exist."""


class InsufficientDataError(CkmError):
    """Not enough rows to compute a statistic."""


class GenerationError(CkmError):
    """The generator settings cannot be satisfied."""


class ArgumentError(CkmError, ValueError):
    """Invalid arguments to a numeric routine."""

"""
lang/errors.py
Errors raised while lexing, parsing and evaluating σ-set scripts.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from core.errors import SigmaError


class LangError(SigmaError):
    """Base for language errors; carries a 1-based source position when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class LexError(LangError):
    pass


class ParseError(LangError):
    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        if self.expected:
            message = f"{message} (expected one of: {', '.join(self.expected)})"
        super().__init__(message, line, column)


class EvaluationError(LangError):
    pass


class NonAssociativeChainError(EvaluationError):
    pass

"""
Lang Module
The σ-set expression language: lexer, parser, evaluator and formatter.
"""

from .errors import (
    LangError,
    LexError,
    ParseError,
    EvaluationError,
    NonAssociativeChainError
)

from .parser import parse, parse_expression

from .evaluator import (
    CheckReport,
    Outcome,
    Session,
    Witness,
    evaluate
)

from .formatter import (
    format_value,
    format_result,
    format_outcome,
    outcome_record,
    error_record
)

__all__ = [
    # Errors
    'LangError',
    'LexError',
    'ParseError',
    'EvaluationError',
    'NonAssociativeChainError',
    # Parsing
    'parse',
    'parse_expression',
    # Evaluation
    'CheckReport',
    'Outcome',
    'Session',
    'Witness',
    'evaluate',
    # Output
    'format_value',
    'format_result',
    'format_outcome',
    'outcome_record',
    'error_record',
]

"""
core/errors.py
Exception hierarchy shared by the algebra, the language and the CLI.

Everything raised on purpose derives from SigmaError, so front ends can
catch one type and map it to an exit code.
"""

from __future__ import annotations

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from core.models import SigmaSet


class SigmaError(Exception):
    """Base class for all library errors."""


class AtomSyntaxError(SigmaError, ValueError):
    """An atom symbol is empty, contains '*' or is not an identifier."""

    def __init__(self, symbol: str, reason: str = "malformed atom symbol"):
        self.symbol = symbol
        super().__init__(f"{reason}: {symbol!r}")


class UsageError(SigmaError, ValueError):
    """An operation was called outside its precondition (empty chain, empty family, bad arity)."""


class ConfigError(SigmaError, ValueError):
    """A setting read from the environment or the command line is invalid."""


class OracleInfeasibleError(SigmaError):
    """
    The brute-force oracle was asked to enumerate a universe above its bound.

    When raised by the solver, `candidate` carries the unverified candidate so
    callers can still report it.
    """

    def __init__(self, size: int, limit: int, candidate: Optional["SigmaSet"] = None):
        self.size = size
        self.limit = limit
        self.candidate = candidate
        super().__init__(
            f"oracle-infeasible: universe has {size} base symbols, limit is {limit}"
        )


class ContractViolation(SigmaError, AssertionError):
    """Two independent routes to the same answer disagreed."""


class CliUsageError(SigmaError):
    """Malformed command-line flags or arguments."""

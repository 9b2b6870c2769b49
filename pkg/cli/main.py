"""
cli/main.py
σ-set calculus - Command-Line Entry Point
Date: 10/17/26

Description:
  Parses flags over environment settings and runs one of four modes against
  a Session, mapping outcomes and exceptions to exit codes.

Usage:
    python -m cli repl
    python -m cli eval data/worked_examples.sigma
    python -m cli solve --a "{α, β}" --b "{a*, b*, c*, α, β}"
    python -m cli check localassoc "{1,2}" "{1*,2*}" "{1,2}"

Every subcommand takes --json, --strict, --log-level and --env-file.

Exit codes:
    0  success
    1  parse, evaluation or usage error
    2  a check returned false under --strict
    3  solve found no solution
    4  the oracle universe was too large
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import IO, List, Mapping, Optional, Sequence, Tuple

from core.config import Settings
from core.errors import CliUsageError, OracleInfeasibleError, SigmaError
from core.logging_utils import setup_logging
from lang import Session, parse, parse_expression
from lang.nodes import CHECK_ARITY, Check, Fuse, Group, Solve, Var
from .output import Emitter
from .repl import Repl

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    ERROR = 1
    CHECK_FAILED = 2
    NO_SOLUTION = 3
    ORACLE_INFEASIBLE = 4


class Mode(Enum):
    REPL = "repl"
    EVAL_FILE = "eval"
    SOLVE = "solve"
    CHECK = "check"


class OutputFormat(Enum):
    HUMAN = "human"
    JSON = "json"


class Strictness(Enum):
    WARN = "warn"
    ERROR = "error"


@dataclass(frozen=True)
class CliConfig:
    """One invocation: the mode, its inputs, and the output settings."""

    mode: Mode
    output: OutputFormat = OutputFormat.HUMAN
    strictness: Strictness = Strictness.WARN
    path: Optional[str] = None                 # eval
    a: Optional[str] = None                    # solve
    b: Optional[str] = None
    var: str = "X"
    kind: Optional[str] = None                 # check
    args: Tuple[str, ...] = ()
    settings: Settings = field(default_factory=Settings)

    def __post_init__(self):
        if self.mode is Mode.EVAL_FILE and not self.path:
            raise CliUsageError("eval needs a file path")
        if self.mode is Mode.SOLVE and (self.a is None or self.b is None):
            raise CliUsageError("solve needs both --a and --b")
        if self.mode is Mode.CHECK:
            if self.kind not in CHECK_ARITY:
                raise CliUsageError(f"unknown check {self.kind!r}; choose from {', '.join(CHECK_ARITY)}")
            low, high = CHECK_ARITY[self.kind]
            if len(self.args) < low or (high is not None and len(self.args) > high):
                wanted = f"exactly {low}" if low == high else f"at least {low}"
                raise CliUsageError(f"check {self.kind} takes {wanted} expression(s), got {len(self.args)}")

    @property
    def json_output(self) -> bool:
        return self.output is OutputFormat.JSON

    @property
    def strict(self) -> bool:
        return self.strictness is Strictness.ERROR


# -------------------- argument parsing --------------------

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None, help="one JSON object per statement")
    common.add_argument("--strict", action="store_true", default=None,
                        help="reject fusion chains that are not locally associative")
    common.add_argument("--log-level", default=None, help="logging level for diagnostics")
    common.add_argument("--env-file", default=None, help="read settings from this .env file")

    parser = _ArgumentParser(prog="sigma", description="σ-set calculus: sets, antisets and annihilating fusion")
    sub = parser.add_subparsers(dest="command")

    sub.add_parser("repl", parents=[common], help="interactive session")

    eval_p = sub.add_parser("eval", parents=[common], help="evaluate a script file ('-' for stdin)")
    eval_p.add_argument("path")

    solve_p = sub.add_parser("solve", parents=[common], help="solve A + X = B for X")
    solve_p.add_argument("--a", required=True, help="the known operand A")
    solve_p.add_argument("--b", required=True, help="the right side B")
    solve_p.add_argument("--var", default="X", help="name of the unknown (default X)")

    check_p = sub.add_parser("check", parents=[common], help="one-shot verdict with witness")
    check_p.add_argument("kind", choices=sorted(CHECK_ARITY))
    check_p.add_argument("exprs", nargs="+")

    return parser


def parse_config(argv: Optional[Sequence[str]] = None, environ: Optional[Mapping[str, str]] = None) -> CliConfig:
    """
    Build a CliConfig from command-line arguments, layered over environment settings.

    Raises:
        CliUsageError: malformed flags or arguments.
        ConfigError: an invalid environment setting.
    """
    ns = build_parser().parse_args(list(argv) if argv is not None else None)
    command = ns.command or "repl"

    settings = Settings.from_env(getattr(ns, "env_file", None), environ)
    settings = settings.with_overrides(
        output="json" if getattr(ns, "json", None) else None,
        strict=True if getattr(ns, "strict", None) else None,
        log_level=ns.log_level.upper() if getattr(ns, "log_level", None) else None,
    )
    if not isinstance(logging.getLevelName(settings.log_level), int):
        raise CliUsageError(f"--log-level is not a logging level: {settings.log_level!r}")

    return CliConfig(
        mode=Mode(command),
        output=OutputFormat(settings.output),
        strictness=Strictness.ERROR if settings.strict else Strictness.WARN,
        path=getattr(ns, "path", None),
        a=getattr(ns, "a", None),
        b=getattr(ns, "b", None),
        var=getattr(ns, "var", "X"),
        kind=getattr(ns, "kind", None),
        args=tuple(getattr(ns, "exprs", ())),
        settings=settings,
    )


# -------------------- modes --------------------

def _run_script(source: str, session: Session, emitter: Emitter) -> ExitCode:
    statements = parse(source)
    for stmt in statements:
        try:
            outcome = session.execute(stmt)
        except SigmaError as exc:
            emitter.error(stmt.text, exc)
            return _exit_for(exc)
        emitter.outcome(outcome)
    return ExitCode.OK


def _run_solve(config: CliConfig, session: Session, emitter: Emitter) -> ExitCode:
    a, b = parse_expression(config.a), parse_expression(config.b)
    text = f"solve {config.var} in ({config.a}) + {config.var} = {config.b}"
    stmt = Solve(config.var, Fuse(Group(a), Var(config.var)), b, text=text, line=0)   # A is one known term
    outcome = session.execute(stmt)
    emitter.outcome(outcome)
    return ExitCode.OK if outcome.ok else ExitCode.NO_SOLUTION


def _run_check(config: CliConfig, session: Session, emitter: Emitter) -> ExitCode:
    exprs = tuple(parse_expression(arg) for arg in config.args)
    text = f"{config.kind}({', '.join(config.args)})"
    outcome = session.execute(Check(config.kind, exprs, text=text, line=0))
    emitter.outcome(outcome)
    if config.strict and not outcome.ok:
        return ExitCode.CHECK_FAILED
    return ExitCode.OK


def _exit_for(exc: BaseException) -> ExitCode:
    if isinstance(exc, OracleInfeasibleError):
        return ExitCode.ORACLE_INFEASIBLE
    return ExitCode.ERROR


def _input_text(config: CliConfig) -> str:
    if config.mode is Mode.SOLVE:
        return f"solve --a {config.a} --b {config.b}"
    if config.mode is Mode.CHECK:
        return f"check {config.kind} {' '.join(config.args)}"
    return config.path or ""


def _read_source(path: str, stdin: IO[str]) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:      # undecodable bytes raise UnicodeDecodeError
        return fh.read()


def run(config: CliConfig, stdin: IO[str], stdout: IO[str], stderr: IO[str]) -> int:
    """Execute one invocation against the given streams and return its exit code."""
    setup_logging(config.settings.log_level, stderr)
    emitter = Emitter(stdout, stderr, config.json_output)
    session = Session(strict=config.strict, max_bases=config.settings.oracle_max_bases)
    logger.debug("running %s (output=%s, strict=%s)", config.mode.value, config.output.value, config.strict)

    try:
        if config.mode is Mode.REPL:
            return Repl(session, emitter, stdin, config.settings.prompt).run()
        if config.mode is Mode.EVAL_FILE:
            return int(_run_script(_read_source(config.path, stdin), session, emitter))
        if config.mode is Mode.SOLVE:
            return int(_run_solve(config, session, emitter))
        return int(_run_check(config, session, emitter))
    except (SigmaError, OSError, UnicodeDecodeError) as exc:
        emitter.error(_input_text(config), exc)
        return int(_exit_for(exc))


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except SigmaError as exc:
        Emitter(sys.stdout, sys.stderr, json_output=False).error("", exc)
        return int(ExitCode.ERROR)
    return run(config, sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

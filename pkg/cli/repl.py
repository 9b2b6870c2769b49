"""
cli/repl.py
Interactive loop over a Session.

Each input line is parsed and evaluated on its own; an error is reported and
the session carries on with its environment unchanged.
"""

from __future__ import annotations

import logging
from typing import IO

from core.errors import SigmaError
from lang import Session, format_value, parse
from .output import Emitter

logger = logging.getLogger(__name__)

HELP = """\
statements (newline or ';' separated):
  A = {a, b*}                 bind a name
  A + B \\ C & D               fuse, star difference, hat intersection
  anti(A)                     antiset
  solve X in A + X = B        solve for X (binds X when solved)
  assoc(A, B, C)              associativity of (A + B) + C vs A + (B + C)
  localassoc(A, B, C)         associativity in every ordering
  group(A, B, ...)            group-context check of a family
  af(A, B, ...)               antielement-free family check
meta commands:
  :env    show bindings
  :reset  clear bindings
  :help   show this text
  :quit   leave"""


class Repl:
    def __init__(self, session: Session, emitter: Emitter, stdin: IO[str], prompt: str = "σ> "):
        self.session = session
        self.emitter = emitter
        self.stdin = stdin
        self.prompt = prompt

    def meta(self, command: str) -> bool:
        """Run a ':' command. Returns False when the loop should stop."""
        out = self.emitter.stdout
        if command in (":quit", ":q", ":exit"):
            return False
        if command == ":env":
            for name in sorted(self.session.env):
                out.write(f"{name} = {format_value(self.session.env[name])}\n")
        elif command == ":reset":
            self.session.reset()
            self.emitter.note("environment cleared")
        elif command == ":help":
            out.write(HELP + "\n")
        else:
            self.emitter.note(f"unknown command {command}; try :help")
        return True

    def line(self, text: str) -> None:
        try:
            statements = parse(text)
        except SigmaError as exc:
            self.emitter.error(text, exc)
            return
        for stmt in statements:
            try:
                outcome = self.session.execute(stmt)
            except SigmaError as exc:
                self.emitter.error(stmt.text, exc)
                return
            self.emitter.outcome(outcome, echo_bindings=True)

    def run(self) -> int:
        out = self.emitter.stdout
        while True:
            out.write(self.prompt)
            out.flush()
            raw = self.stdin.readline()
            if not raw:
                out.write("\n")
                break
            text = raw.strip()
            if not text:
                continue
            if text.startswith(":"):
                if not self.meta(text):
                    break
                continue
            self.line(text)
        logger.debug("repl closed with %d binding(s)", len(self.session.env))
        return 0

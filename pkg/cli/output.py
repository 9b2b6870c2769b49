"""
cli/output.py
Writes outcomes to the result stream and diagnostics to the error stream.

Results go to stdout, as `key = value` text or one JSON object per line.
Errors go through a rich console bound to stderr; warnings raised while
evaluating reach stderr through the logging handler.
"""

from __future__ import annotations

import json
from typing import IO, Any, Dict

from rich.console import Console
from rich.markup import escape

from lang import Outcome, error_record, format_outcome, outcome_record


def make_console(stream: IO[str]) -> Console:
    return Console(file=stream, highlight=False, soft_wrap=True, emoji=False)


class Emitter:
    def __init__(self, stdout: IO[str], stderr: IO[str], json_output: bool):
        self.stdout = stdout
        self.console = make_console(stderr)
        self.json_output = json_output

    def _write_record(self, record: Dict[str, Any]) -> None:
        self.stdout.write(json.dumps(record, ensure_ascii=False) + "\n")

    def outcome(self, outcome: Outcome, echo_bindings: bool = False) -> None:
        """Print one statement's result; bindings print only in JSON mode or when echoed."""
        if self.json_output:
            self._write_record(outcome_record(outcome))
        elif outcome.kind != "binding" or echo_bindings:
            self.stdout.write(format_outcome(outcome) + "\n")
        self.stdout.flush()

    def error(self, text: str, exc: BaseException) -> None:
        self.console.print(f"[bold red]error:[/bold red] {escape(str(exc))}")
        if self.json_output:
            self._write_record(error_record(text, exc))
            self.stdout.flush()

    def note(self, message: str) -> None:
        self.console.print(f"[dim]{escape(message)}[/dim]")

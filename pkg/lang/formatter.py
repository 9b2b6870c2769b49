"""
lang/formatter.py
Canonical text and JSON renderings of values and reports.

σ-sets render as `{a, b*, c}` (sorted by base, plain before anti; ∅ is `{}`),
which the parser reads back unchanged. Reports render as stable
`key = value` lines.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Union

from core.models import SigmaSet, SolveResult
from .evaluator import CheckReport, Outcome, Witness


def format_value(value: SigmaSet) -> str:
    return str(value)


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_solve(result: SolveResult, var: str = "X") -> str:
    lines = [
        f"status = {result.status.value}",
        f"{var if result.solved else 'candidate'} = {result.candidate}",
        f"verified = {_scalar(result.verified)}",
    ]
    if result.residual is not None:
        lines.append(f"residual = {result.residual}")
    return "\n".join(lines)


def format_check(report: CheckReport) -> str:
    lines = [f"check = {report.kind}", f"verdict = {_scalar(report.verdict)}"]
    lines += [f"{key} = {_scalar(value)}" for key, value in report.details.items()]
    if report.witness is not None:
        lines.append(f"witness = {report.witness.reason}")
        if report.witness.ordering is not None:
            lines.append(f"ordering = {report.witness.ordering}")
        lines += [f"replay = {text}" for text in report.witness.replay]
    return "\n".join(lines)


def format_outcome(outcome: Outcome) -> str:
    if outcome.check is not None:
        return format_check(outcome.check)
    if outcome.solve is not None:
        return format_solve(outcome.solve, outcome.name or "X")
    if outcome.kind == "binding":
        return f"{outcome.name} = {outcome.value}"
    return format_value(outcome.value)


def format_result(value: Union[SigmaSet, SolveResult, CheckReport, Outcome]) -> str:
    """Render any evaluation result as text."""
    if isinstance(value, SigmaSet):
        return format_value(value)
    if isinstance(value, SolveResult):
        return format_solve(value)
    if isinstance(value, CheckReport):
        return format_check(value)
    return format_outcome(value)


# -------------------- JSON records --------------------

def witness_record(witness: Witness) -> Dict[str, Any]:
    record: Dict[str, Any] = {"reason": witness.reason, "replay": list(witness.replay)}
    if witness.ordering is not None:
        record["ordering"] = witness.ordering
    return record


def outcome_record(outcome: Outcome) -> Dict[str, Any]:
    """One JSON object per statement: kind, input, ok, result, and witness/warnings when present."""
    result: Any
    if outcome.check is not None:
        result = {"check": outcome.check.kind, "verdict": outcome.check.verdict, **outcome.check.details}
    elif outcome.solve is not None:
        solve = outcome.solve
        result = {
            "status": solve.status.value,
            "variable": outcome.name,
            "candidate": str(solve.candidate),
            "verified": solve.verified,
            "residual": str(solve.residual) if solve.residual is not None else None,
        }
    else:
        result = str(outcome.value)

    record: Dict[str, Any] = {
        "kind": outcome.kind,
        "input": outcome.text,
        "ok": outcome.ok,
        "result": result,
    }
    if outcome.kind == "binding":
        record["name"] = outcome.name
    if outcome.check is not None and outcome.check.witness is not None:
        record["witness"] = witness_record(outcome.check.witness)
    if outcome.warnings:
        record["warnings"] = list(outcome.warnings)
    return record


def error_record(text: str, error: Exception, kind: str = "error") -> Dict[str, Any]:
    record: Dict[str, Any] = {"kind": kind, "input": text, "ok": False, "result": None, "error": str(error)}
    candidate: Optional[SigmaSet] = getattr(error, "candidate", None)
    if candidate is not None:
        record["candidate"] = str(candidate)
    return record


def human_lines(outcomes: List[Outcome]) -> List[str]:
    return [format_outcome(o) for o in outcomes]

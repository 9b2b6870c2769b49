"""
lang/evaluator.py
σ-set calculus - Statement Evaluator
Date: 10/17/26

Description:
  Evaluates parsed σ-set statements against an environment of bindings.

Implements:
  - expressions, with window-by-window chain checks
  - solve statements over a single known term
  - assoc, localassoc, group and af checks with replayable witnesses
  - Session, the env-holding front end used by the CLI and the REPL

Set literals are canonicalized on evaluation ({1, 1*} is ∅). Fusion chains
with three or more operands are checked window by window for local
associativity: the left fold is always well defined, so a failing window
is a warning unless strict mode turns it into an error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Tuple

from core.models import EMPTY, MAX_UNIVERSE_BASES, GroupContext, SigmaSet, SolveResult
from core.sigma import (
    antiset,
    chain_value,
    check_group,
    eval_chain,
    find_af_violation,
    fuse,
    hat_intersect,
    is_assoc_order,
    is_locally_associative,
    make_sigma_set,
    parse_atom,
    solve_fusion_equation,
    star_diff,
    triad_system,
)
from .errors import EvaluationError, NonAssociativeChainError
from .nodes import (
    Anti,
    Binding,
    Check,
    Expr,
    ExprStatement,
    Fuse,
    Group,
    HatIntersect,
    SetLiteral,
    Solve,
    StarDiff,
    Statement,
    Var,
    fusion_operands,
    mentions,
    ungroup,
)
from .parser import parse

logger = logging.getLogger(__name__)

Env = Dict[str, SigmaSet]


@dataclass(frozen=True)
class Witness:
    """Why a check failed, with source text that replays the failure."""

    reason: str
    replay: Tuple[str, ...] = ()
    ordering: Optional[str] = None


@dataclass(frozen=True)
class CheckReport:
    kind: str
    verdict: bool
    args: Tuple[SigmaSet, ...]
    details: Dict[str, object] = field(default_factory=dict)
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Outcome:
    """Result of one statement."""

    kind: str                                   # binding | expr | solve | check
    text: str
    value: Optional[SigmaSet] = None
    name: Optional[str] = None                  # bound name or solve variable
    solve: Optional[SolveResult] = None
    check: Optional[CheckReport] = None
    warnings: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        if self.check is not None:
            return self.check.verdict
        if self.solve is not None:
            return self.solve.solved
        return True


class _Evaluator:
    def __init__(self, env: Mapping[str, SigmaSet], strict: bool, max_bases: int, line: int):
        self.env = env
        self.strict = strict
        self.max_bases = max_bases
        self.line = line
        self.warnings: List[str] = []

    def error(self, message: str) -> EvaluationError:
        return EvaluationError(message, self.line or None, 1 if self.line else None)

    # -------------------- expressions --------------------

    def expr(self, node: Expr) -> SigmaSet:
        if isinstance(node, SetLiteral):
            return make_sigma_set(parse_atom(t) for t in node.atoms)
        if isinstance(node, Var):
            if node.name not in self.env:
                raise self.error(f"unbound variable {node.name!r}")
            return self.env[node.name]
        if isinstance(node, Fuse):
            values = [self.expr(operand) for operand in fusion_operands(node)]
            if len(values) >= 3:
                self.check_chain(values)
            return chain_value(values)
        if isinstance(node, HatIntersect):
            return hat_intersect(self.expr(node.left), self.expr(node.right))
        if isinstance(node, StarDiff):
            return star_diff(self.expr(node.left), self.expr(node.right))
        if isinstance(node, Anti):
            return antiset(self.expr(node.inner))
        if isinstance(node, Group):
            return self.expr(node.inner)
        raise self.error(f"cannot evaluate {node!r}")

    def check_chain(self, values: List[SigmaSet]) -> None:
        for i in range(len(values) - 2):
            a, b, c = values[i:i + 3]
            if is_locally_associative(a, b, c):
                continue
            order = triad_system(a, b, c).witness_order
            message = (
                f"chain terms {i + 1}-{i + 3} ({a}, {b}, {c}) are not locally associative "
                f"(ordering {order} fails); the left-fold result depends on grouping"
            )
            if self.strict:
                raise NonAssociativeChainError(message, self.line or None, 1 if self.line else None)
            logger.warning(message)
            self.warnings.append(message)

    # -------------------- statements --------------------

    def solve(self, stmt: Solve) -> SolveResult:
        var = stmt.var
        operands = [ungroup(o) for o in fusion_operands(ungroup(stmt.lhs))]
        occurrences = mentions(stmt.lhs, var)
        top_level = sum(1 for o in operands if isinstance(o, Var) and o.name == var)
        if occurrences == 0:
            raise self.error(f"{var!r} does not occur on the left side")
        if occurrences > 1:
            raise self.error(f"{var!r} occurs {occurrences} times on the left side; it must occur once")
        if top_level != 1:
            raise self.error(f"{var!r} must be a direct operand of the left-side fusion chain")
        if mentions(stmt.rhs, var):
            raise self.error(f"{var!r} must not occur on the right side")

        others = [o for o in operands if not (isinstance(o, Var) and o.name == var)]
        if len(others) > 1:
            raise self.error(
                f"left side fuses {var!r} with {len(others)} other operands; fusion is not "
                f"associative, so they cannot be merged into a single known term. "
                f"Parenthesise them or bind their fusion to a name"
            )
        a = self.expr(others[0]) if others else EMPTY
        b = self.expr(stmt.rhs)
        return solve_fusion_equation(a, b, self.max_bases)

    def check(self, stmt: Check) -> CheckReport:
        values = tuple(self.expr(arg) for arg in stmt.args)
        if stmt.kind == "assoc":
            return _assoc_report(*values)
        if stmt.kind == "localassoc":
            return _localassoc_report(*values)
        if stmt.kind == "group":
            return _group_report(values, check_group(values))
        if stmt.kind == "af":
            return _af_report(values)
        raise self.error(f"unknown check {stmt.kind!r}")


# -------------------- check reports --------------------

def _assoc_report(a: SigmaSet, b: SigmaSet, c: SigmaSet) -> CheckReport:
    verdict = is_assoc_order(a, b, c)
    left, right = fuse(fuse(a, b), c), fuse(a, fuse(b, c))
    details = {"e_s": str(eval_chain(a, b, c)), "left": str(left), "right": str(right)}
    witness = None
    if not verdict:
        witness = Witness(
            reason=f"({a} + {b}) + {c} = {left} but {a} + ({b} + {c}) = {right}",
            replay=(f"({a} + {b}) + {c}", f"{a} + ({b} + {c})"),
        )
    return CheckReport("assoc", verdict, (a, b, c), details, witness)


def _localassoc_report(x: SigmaSet, y: SigmaSet, z: SigmaSet) -> CheckReport:
    verdict = is_locally_associative(x, y, z)
    report = triad_system(x, y, z)
    details = {
        "e_x": str(report.e_x),
        "e_y": str(report.e_y),
        "e_z": str(report.e_z),
        "failing_orders": ",".join(report.failing_orders),
    }
    witness = None
    if not verdict:
        order = report.witness_order
        p, q, r = report.operands(order)
        witness = Witness(
            reason=f"ordering {order} is not associative: ({p} + {q}) + {r} = "
                   f"{fuse(fuse(p, q), r)} but {p} + ({q} + {r}) = {fuse(p, fuse(q, r))}",
            replay=(f"assoc({p}, {q}, {r})", f"({p} + {q}) + {r}", f"{p} + ({q} + {r})"),
            ordering=order,
        )
    return CheckReport("localassoc", verdict, (x, y, z), details, witness)


def _group_report(values: Tuple[SigmaSet, ...], ctx: GroupContext) -> CheckReport:
    rep = ctx.report
    details = {
        "members": len(ctx.members),
        "has_identity": rep.has_identity,
        "closed_under_antiset": rep.closed_under_antiset,
        "closed_under_fusion": rep.closed_under_fusion,
        "all_triples_locally_associative": rep.all_triples_locally_associative,
    }
    witness = None
    w = rep.failing_witness
    if w is not None:
        if w.flag == "identity":
            witness = Witness("the identity {} is not a member", ("0",))
        elif w.flag == "antiset":
            (m,) = w.sets
            witness = Witness(f"anti({m}) = {antiset(m)} is not a member", (f"anti({m})",))
        elif w.flag == "fusion":
            a, b = w.sets
            witness = Witness(f"{a} + {b} = {fuse(a, b)} is not a member", (f"{a} + {b}",))
        else:
            x, y, z = w.sets
            witness = Witness(
                f"triple ({x}, {y}, {z}) is not locally associative (ordering {w.ordering} fails)",
                (f"localassoc({x}, {y}, {z})",),
                ordering=w.ordering,
            )
    return CheckReport("group", ctx.is_group, values, details, witness)


def _af_report(values: Tuple[SigmaSet, ...]) -> CheckReport:
    pair = find_af_violation(values)
    witness = None
    if pair is not None:
        a, b = pair
        witness = Witness(f"{a} & {b} = {hat_intersect(a, b)} is not empty", (f"{a} & {b}",))
    return CheckReport("af", pair is None, values, {"members": len(values)}, witness)


# -------------------- public API --------------------

def evaluate(
    stmt: Statement,
    env: Mapping[str, SigmaSet],
    strict: bool = False,
    max_bases: int = MAX_UNIVERSE_BASES,
) -> Tuple[Outcome, Env]:
    """
    Evaluate one statement. Returns the outcome and the updated environment;
    the environment passed in is never mutated.

    Raises:
        EvaluationError: unbound variable or a solve of the wrong shape.
        NonAssociativeChainError: strict mode and a chain window fails.
        OracleInfeasibleError: a failed solve whose oracle universe is too large.
    """
    ev = _Evaluator(env, strict, max_bases, stmt.line)
    new_env: Env = dict(env)

    if isinstance(stmt, Binding):
        value = ev.expr(stmt.expr)
        new_env[stmt.name] = value
        outcome = Outcome("binding", stmt.text, value=value, name=stmt.name)
    elif isinstance(stmt, ExprStatement):
        outcome = Outcome("expr", stmt.text, value=ev.expr(stmt.expr))
    elif isinstance(stmt, Solve):
        result = ev.solve(stmt)
        if result.solved:
            new_env[stmt.var] = result.candidate
        outcome = Outcome("solve", stmt.text, value=result.candidate, name=stmt.var, solve=result)
    elif isinstance(stmt, Check):
        report = ev.check(stmt)
        outcome = Outcome("check", stmt.text, check=report)
    else:
        raise EvaluationError(f"unknown statement {stmt!r}")

    if ev.warnings:
        outcome = replace(outcome, warnings=tuple(ev.warnings))
    return outcome, new_env


class Session:
    """A single-threaded evaluation session: the environment plus evaluation settings."""

    def __init__(self, strict: bool = False, max_bases: int = MAX_UNIVERSE_BASES):
        self.env: Env = {}
        self.strict = strict
        self.max_bases = max_bases

    def execute(self, stmt: Statement) -> Outcome:
        outcome, self.env = evaluate(stmt, self.env, self.strict, self.max_bases)
        return outcome

    def run(self, source: str) -> List[Outcome]:
        """Parse and evaluate a script; stops at the first error."""
        return [self.execute(stmt) for stmt in parse(source)]

    def reset(self) -> None:
        self.env = {}

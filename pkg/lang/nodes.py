"""
lang/nodes.py
AST for σ-set scripts.

Expressions:  SetLiteral | Var | Fuse | HatIntersect | StarDiff | Anti | Group
Statements:   Binding | ExprStatement | Solve | Check

A chain `a + b + c` parses left-nested, Fuse(Fuse(a, b), c), matching the
left-fold evaluation of fusion chains.
Parentheses are kept as a Group node, so `(a + b) + c` is a two-operand
fusion whose left operand is already fixed and is not checked as a chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple, Union

# check-kind -> (min args, max args); None means unbounded
CHECK_ARITY = {
    "assoc": (3, 3),
    "localassoc": (3, 3),
    "group": (1, None),
    "af": (1, None),
}

KEYWORDS = frozenset({"solve", "in", "anti"} | set(CHECK_ARITY))


# -------------------- expressions --------------------

@dataclass(frozen=True)
class SetLiteral:
    atoms: Tuple[str, ...] = ()          # atom tokens as written, e.g. ("1", "2*")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Fuse:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class HatIntersect:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class StarDiff:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Anti:
    inner: "Expr"


@dataclass(frozen=True)
class Group:
    inner: "Expr"                       # explicit parentheses


Expr = Union[SetLiteral, Var, Fuse, HatIntersect, StarDiff, Anti, Group]


# -------------------- statements --------------------

@dataclass(frozen=True)
class Binding:
    name: str
    expr: Expr
    text: str = field(default="", compare=False)
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ExprStatement:
    expr: Expr
    text: str = field(default="", compare=False)
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Solve:
    var: str
    lhs: Expr
    rhs: Expr
    text: str = field(default="", compare=False)
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Check:
    kind: str
    args: Tuple[Expr, ...]
    text: str = field(default="", compare=False)
    line: int = field(default=0, compare=False)


Statement = Union[Binding, ExprStatement, Solve, Check]


def fusion_operands(expr: Expr) -> List[Expr]:
    """Operands of the chain rooted at `expr`, following the left-nested Fuse spine."""
    operands: List[Expr] = []
    while isinstance(expr, Fuse):
        operands.append(expr.right)
        expr = expr.left
    operands.append(expr)
    operands.reverse()
    return operands


def ungroup(expr: Expr) -> Expr:
    while isinstance(expr, Group):
        expr = expr.inner
    return expr


def mentions(expr: Expr, name: str) -> int:
    """How many times variable `name` occurs in `expr`."""
    if isinstance(expr, Var):
        return int(expr.name == name)
    if isinstance(expr, SetLiteral):
        return 0
    if isinstance(expr, (Anti, Group)):
        return mentions(expr.inner, name)
    return mentions(expr.left, name) + mentions(expr.right, name)

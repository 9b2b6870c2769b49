"""
scripts/quick_demo.py
Walk through the worked examples of the σ-set calculus and print each as a table row.

Usage:
  python -m scripts.quick_demo

  Date - 10/17/26
"""

from __future__ import annotations

from typing import List, Tuple

from core.sigma import (
    antiset,
    chain_value,
    check_group,
    eval_chain,
    fuse,
    hat_intersect,
    is_assoc_order,
    parse_sigma_set,
    solve_fusion_equation,
    star_diff,
    triad_system,
)

Row = Tuple[str, str]                                 # (expression, result)


def s(text: str):                                     # shorthand for set literals
    return parse_sigma_set(text)


def operation_rows() -> List[Row]:
    x, y = s("{1, 2}"), s("{1*, 2*}")
    return [
        ("{1, 2} ∩̂ {1*, 2*}", str(hat_intersect(x, y))),
        ("{1, 2} ⊛ {1*, 2*}", str(star_diff(x, y))),
        ("{1, 2} ∪ {1*, 2*}", str(fuse(x, y))),
        ("{1, 2} ∪ {}", str(fuse(x, s("{}")))),
        ("anti({a, b})", str(antiset(s("{a, b}")))),
    ]


def chain_rows() -> List[Row]:
    x, y = s("{1, 2}"), s("{1*, 2*}")
    a, b, c = s("{a, b}"), s("{a*, b*}"), s("{c, d}")
    z = s("{1*}")
    return [
        ("({1, 2} ∪ {1*, 2*}) ∪ {1*}", str(fuse(fuse(x, y), z))),     # left grouping
        ("{1, 2} ∪ ({1*, 2*} ∪ {1*})", str(fuse(x, fuse(y, z)))),     # right grouping
        ("→ABC, A={a,b} B={a*,b*} C={c,d}", str(chain_value([a, b, c]))),
        ("E_S(A, B, C)", str(eval_chain(a, b, c))),
        ("E_S({1,2}, {1*,2*}, {1*})", str(eval_chain(x, y, z))),
        ("assoc({1,2}, {1*,2*}, {1*})", str(is_assoc_order(x, y, z)).lower()),
    ]


def triad_rows() -> List[Row]:
    report = triad_system(s("{1, 2}"), s("{1*, 2*}"), s("{1, 2}"))
    return [
        ("E_X({1,2}, {1*,2*}, {1,2})", str(report.e_x)),
        ("E_Y", str(report.e_y)),
        ("E_Z", str(report.e_z)),
        ("locally associative", str(report.locally_associative).lower()),
        ("failing orders", ", ".join(report.failing_orders)),
    ]


def solve_rows() -> List[Row]:
    rows: List[Row] = []
    for a_text, b_text in [("{α, β}", "{a*, b*, c*, α, β}"), ("{}", "{1, 2}"), ("{1}", "{1*}")]:
        result = solve_fusion_equation(s(a_text), s(b_text))          # candidate, verify, oracle
        shown = str(result.candidate) if result.solved else "no solution"
        rows.append((f"{a_text} ∪ X = {b_text}", f"{result.status.value}: {shown}"))
    return rows


def group_rows() -> List[Row]:
    rows: List[Row] = []
    for family in (["{}"], ["{}", "{1}", "{1*}"], ["{}", "{1, 2}", "{1*, 2*}", "{1}"]):
        ctx = check_group([s(m) for m in family])
        witness = ctx.report.failing_witness
        detail = "group" if ctx.is_group else f"fails {witness.flag}: {', '.join(map(str, witness.sets))}"
        rows.append(("{" + ", ".join(family) + "}", detail))
    return rows


def print_table(title: str, rows: List[Row]) -> None:
    print("\n" + title)
    print("-" * len(title))
    width = max(len(expr) for expr, _ in rows)
    for expr, result in rows:
        print(f"{expr:<{width}}  {result}")


def main() -> None:
    print_table("Operations", operation_rows())
    print_table("Chains and evaluation chains", chain_rows())
    print_table("Triad system", triad_rows())
    print_table("Fusion equations", solve_rows())
    print_table("Group contexts", group_rows())


if __name__ == "__main__":
    main()

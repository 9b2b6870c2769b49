"""
scripts/exhaustive_sweep.py
Exhaustive cross-check of the algebra against the brute-force oracle over a small universe.

Every pair (laws, reference fusion), every triple (evaluation chain vs direct check,
triad system vs six orderings, reversal and chain-antiset identities, AF triples) and
every equation A ∪ X = B (solver vs oracle) is checked; the summary lists the number
of discrepancies per sweep. The exit status is 1 if any sweep found one.

Usage:
  python -m scripts.exhaustive_sweep              # 2 bases: 9 sets, 729 triples
  python -m scripts.exhaustive_sweep --bases 3    # 27 sets, 19 683 triples

  Date - 10/17/26
"""

from __future__ import annotations

import argparse
import logging
import sys
from itertools import product
from typing import Dict, List, Optional

from core.errors import ContractViolation
from core.logging_utils import setup_logging
from core.models import EMPTY, SigmaSet, Universe
from core.sigma import (
    antiset,
    brute_force_solve,
    check_chain_antiset,
    check_reversal,
    direct_associative,
    enumerate_sigma_sets,
    eval_chain,
    fuse,
    is_antielement_free_family,
    is_locally_associative,
    reference_fuse,
    solve_fusion_equation,
)

logger = logging.getLogger(__name__)

SYMBOLS = "123456"


def sweep_laws(sets: List[SigmaSet]) -> int:
    """Commutativity, identity, idempotence, annihilation, involution, star-homomorphism, reference fusion."""
    misses = 0                                                          # bools add as 0/1
    for x in sets:
        misses += fuse(x, EMPTY) != x or fuse(x, x) != x                # identity, idempotence
        misses += fuse(x, antiset(x)) != EMPTY or antiset(antiset(x)) != x   # annihilation, involution
        for y in sets:
            xy = fuse(x, y)
            misses += xy != fuse(y, x)                                  # commutativity
            misses += antiset(xy) != fuse(antiset(x), antiset(y))       # star distributes over fusion
            misses += xy != reference_fuse(x, y)                        # per-base table agrees
    return misses


def sweep_triples(sets: List[SigmaSet]) -> Dict[str, int]:
    """Evaluation chain vs direct check, triad system vs six orders, and the chain identities."""
    counts = {"evaluation chain": 0, "triad system": 0, "identities": 0}
    for a, b, c in product(sets, repeat=3):
        if eval_chain(a, b, c).is_empty != direct_associative(a, b, c):
            counts["evaluation chain"] += 1
        try:
            is_locally_associative(a, b, c)
        except ContractViolation as exc:
            logger.info("%s", exc)
            counts["triad system"] += 1
        if not (check_reversal(a, b, c) and check_chain_antiset((a, b, c))):
            counts["identities"] += 1
    return counts


def sweep_af(sets: List[SigmaSet]) -> int:
    """Antielement-free triples must be associative in every ordering."""
    misses = 0
    for a, b, c in product(sets, repeat=3):
        if is_antielement_free_family((a, b, c)) and not is_locally_associative(a, b, c):
            misses += 1
    return misses


def sweep_solver(sets: List[SigmaSet], u: Universe) -> int:
    """Solver status agrees with the oracle, and every solved candidate verifies."""
    misses = 0
    for a, b in product(sets, repeat=2):
        try:
            result = solve_fusion_equation(a, b, len(u))
        except ContractViolation as exc:
            logger.info("%s", exc)
            misses += 1
            continue
        exists = bool(brute_force_solve(a, b, u))                   # every X over the universe
        if result.solved != exists or (result.solved and fuse(a, result.candidate) != b):
            misses += 1
    return misses


def run_sweeps(bases: int) -> Dict[str, int]:
    u = Universe(tuple(SYMBOLS[:bases]))                                # first n symbols
    sets = enumerate_sigma_sets(u)                                      # 3^n σ-sets
    logger.info("sweeping %d σ-sets over %s", len(sets), ", ".join(u.bases))
    summary = {"laws": sweep_laws(sets)}
    summary.update(sweep_triples(sets))
    summary["antielement-free triples"] = sweep_af(sets)
    summary["solver vs oracle"] = sweep_solver(sets, u)
    return summary


def print_table(title: str, summary: Dict[str, int]) -> None:
    print("\n" + title)
    print("-" * len(title))
    width = max(len(name) for name in summary)
    for name, misses in summary.items():
        print(f"{name:<{width}}  {misses}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[2])
    parser.add_argument("--bases", type=int, default=2, choices=range(1, len(SYMBOLS) + 1), metavar="N",
                        help="universe size, 1..6 (default 2)")
    parser.add_argument("--log-level", default="WARNING")
    args = parser.parse_args(argv)

    setup_logging(args.log_level.upper())
    summary = run_sweeps(args.bases)
    print_table(f"Discrepancies over {args.bases} base(s)", summary)
    return 1 if any(summary.values()) else 0


if __name__ == "__main__":
    sys.exit(main())

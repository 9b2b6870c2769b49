"""
Group Contexts & Equations
σ-set calculus – group verification and the one-variable fusion equation

Provides:
- check_group: identity, antiset closure, fusion closure and local
  associativity of every ordered triple, with the first failing witness
- solve_fusion_equation: A ∪ X = B via the candidate X = B ∪ A*, verified,
  with the brute-force oracle consulted whenever the candidate fails
- brute_force_solve: every X over a universe with A ∪ X = B
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, List, Optional, Set, Union

from core.errors import ContractViolation, OracleInfeasibleError, UsageError
from core.models import (
    EMPTY,
    MAX_UNIVERSE_BASES,
    GroupContext,
    GroupReport,
    GroupWitness,
    SigmaSet,
    SolveResult,
    SolveStatus,
    Universe,
)
from .assoc import first_non_local_triple, is_locally_associative
from .fusion import antiset, fuse
from .oracle import check_feasible, iter_sigma_sets, reference_fuse

logger = logging.getLogger(__name__)


# -------------------- group contexts --------------------

def check_group(members: Iterable[SigmaSet]) -> GroupContext:
    """
    Verify the group axioms for a finite family under fusion.

    Members are deduplicated and visited in canonical σ-set order, so the
    witness (first failing check, in the order identity, antiset, fusion,
    local associativity) is reproducible.

    Raises:
        UsageError: if the family is empty.
    """
    pool: List[SigmaSet] = sorted(set(members))
    if not pool:
        raise UsageError("group check needs at least one member")
    member_set = set(pool)
    witness: Optional[GroupWitness] = None

    has_identity = EMPTY in member_set
    if not has_identity:
        witness = GroupWitness("identity")

    missing_inverse = next((m for m in pool if antiset(m) not in member_set), None)
    if missing_inverse is not None and witness is None:
        witness = GroupWitness("antiset", (missing_inverse,))

    unclosed = next(
        ((a, b) for a, b in product(pool, repeat=2) if fuse(a, b) not in member_set),
        None,
    )
    if unclosed is not None and witness is None:
        witness = GroupWitness("fusion", unclosed)

    failing = first_non_local_triple(pool)
    if failing is not None and witness is None:
        witness = GroupWitness(
            "local_associativity", (failing.x, failing.y, failing.z), failing.witness_order
        )

    report = GroupReport(
        has_identity=has_identity,
        closed_under_antiset=missing_inverse is None,
        closed_under_fusion=unclosed is None,
        all_triples_locally_associative=failing is None,
        failing_witness=witness,
    )
    logger.debug("group check over %d members: %s", len(pool), report)
    return GroupContext(members=tuple(pool), report=report)


def replay_witness(witness: GroupWitness, members: Iterable[SigmaSet]) -> bool:
    """Re-run the single check a witness names; False means the failure reproduces."""
    member_set = set(members)
    if witness.flag == "identity":
        return EMPTY in member_set
    if witness.flag == "antiset":
        return antiset(witness.sets[0]) in member_set
    if witness.flag == "fusion":
        a, b = witness.sets
        return fuse(a, b) in member_set
    if witness.flag == "local_associativity":
        return is_locally_associative(*witness.sets)
    raise UsageError(f"unknown witness flag: {witness.flag}")


# -------------------- equations --------------------

def brute_force_solve(
    a: SigmaSet,
    b: SigmaSet,
    universe: Union[Universe, Iterable[str]],
    limit: int = MAX_UNIVERSE_BASES,
) -> Set[SigmaSet]:
    """
    Every canonical σ-set X over `universe` with A ∪ X = B.

    Uses the reference fusion so the oracle shares no code with the solver.

    Raises:
        OracleInfeasibleError: if the universe has more than `limit` bases.
    """
    u = universe if isinstance(universe, Universe) else Universe.from_symbols(universe)
    return {x for x in iter_sigma_sets(u, limit) if reference_fuse(a, x) == b}


def cancellation_applies(a: SigmaSet, b: SigmaSet) -> bool:
    """Whether (B, A*, A) is locally associative, the case where B ∪ A* is guaranteed."""
    return is_locally_associative(b, antiset(a), a)


def solve_fusion_equation(
    a: SigmaSet,
    b: SigmaSet,
    max_bases: int = MAX_UNIVERSE_BASES,
) -> SolveResult:
    """
    Solve A ∪ X = B.

    The candidate B ∪ A* is always computed and verified. When it fails the
    oracle enumerates every X over atoms(A) ∪ atoms(B); a foreign base in X
    would survive fusion with A and show up in B, so that universe is complete.

    Raises:
        OracleInfeasibleError: candidate failed and the universe is too large
            to enumerate; the error carries the unverified candidate.
        ContractViolation: the oracle found a solution the candidate missed.
    """
    candidate = fuse(b, antiset(a))                  # cancel A out of B
    residual = fuse(a, candidate)                     # what A ∪ X actually gives
    if residual == b:
        return SolveResult(a=a, b=b, status=SolveStatus.SOLVED, candidate=candidate, verified=True)

    bases = sorted(a.bases | b.bases)                 # the only bases X can usefully hold
    try:
        check_feasible(len(bases), max_bases)
    except OracleInfeasibleError as exc:
        raise OracleInfeasibleError(exc.size, exc.limit, candidate) from None

    logger.debug("candidate %s failed (residual %s); consulting oracle over %s", candidate, residual, bases)
    solutions = brute_force_solve(a, b, Universe(tuple(bases)), max_bases)
    if solutions:
        logger.warning(
            "oracle found %d solution(s) of %s ∪ X = %s where the candidate %s failed",
            len(solutions), a, b, candidate,
        )
        raise ContractViolation(
            f"candidate {candidate} failed but {min(solutions)} solves {a} ∪ X = {b}"
        )
    return SolveResult(
        a=a, b=b,
        status=SolveStatus.NO_SOLUTION,
        candidate=candidate,
        verified=False,
        residual=residual,
        oracle_solutions=0,
    )

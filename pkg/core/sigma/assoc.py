"""
Associativity Analysis
σ-set calculus – fusion chains, evaluation chains and local associativity

Provides:
- chain_value: left-fold evaluation of →A₁…Aₙ
- eval_chain: E_S = →ABC ∪ →C*B*A*
- is_assoc_order: E_S criterion, cross-checked against the direct comparison
- triad_system / is_locally_associative: the system E = {E_X, E_Y, E_Z}
- the reversal and chain-antiset identities as executable checks

Every verdict is computed twice (evaluation chain and direct left/right
comparison); disagreement raises ContractViolation.
"""

from __future__ import annotations

import logging
from functools import reduce
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from core.errors import ContractViolation
from core.models import FusionChain, SigmaSet, TriadReport
from .fusion import antiset, fuse

logger = logging.getLogger(__name__)

# Adjacent-transposition order, leading pair swapped first.
ORDERINGS = ("XYZ", "YXZ", "YZX", "ZYX", "ZXY", "XZY")

ChainLike = Union[FusionChain, Sequence[SigmaSet]]


def _as_chain(chain: ChainLike) -> FusionChain:
    return chain if isinstance(chain, FusionChain) else FusionChain(tuple(chain))


def chain_value(chain: ChainLike) -> SigmaSet:
    """
    Evaluate a fusion chain by left fold: (…((A₁ ∪ A₂) ∪ A₃)…) ∪ Aₙ.

    Raises:
        UsageError: if the chain is empty.
    """
    chain = _as_chain(chain)
    return reduce(fuse, chain.terms)


def reversed_chain(chain: ChainLike) -> FusionChain:
    """→ABC -> →CBA"""
    return FusionChain(tuple(reversed(_as_chain(chain).terms)))


def starred_chain(chain: ChainLike) -> FusionChain:
    """→ABC -> →A*B*C*"""
    return FusionChain(tuple(antiset(t) for t in _as_chain(chain).terms))


def direct_associative(a: SigmaSet, b: SigmaSet, c: SigmaSet) -> bool:
    """Ground truth: (A ∪ B) ∪ C = A ∪ (B ∪ C)."""
    return fuse(fuse(a, b), c) == fuse(a, fuse(b, c))


def eval_chain(a: SigmaSet, b: SigmaSet, c: SigmaSet) -> SigmaSet:
    """Associativity evaluation chain E_S = →ABC ∪ →C*B*A*."""
    forward = chain_value((a, b, c))
    backward = chain_value((antiset(c), antiset(b), antiset(a)))
    return fuse(forward, backward)


def is_assoc_order(a: SigmaSet, b: SigmaSet, c: SigmaSet) -> bool:
    """True iff E_S = ∅ for the order A, B, C."""
    by_chain = eval_chain(a, b, c).is_empty
    by_direct = direct_associative(a, b, c)
    if by_chain != by_direct:
        raise ContractViolation(
            f"E_S criterion ({by_chain}) disagrees with direct check ({by_direct}) on {a}, {b}, {c}"
        )
    return by_chain


def triad_system(x: SigmaSet, y: SigmaSet, z: SigmaSet) -> TriadReport:
    """Compute E_X, E_Y, E_Z (the cyclic orders) and the direct verdict of all 6 orderings."""
    e_x = eval_chain(x, y, z)
    e_y = eval_chain(y, z, x)
    e_z = eval_chain(z, x, y)
    named = {"X": x, "Y": y, "Z": z}
    verdicts = {
        order: direct_associative(*(named[letter] for letter in order))
        for order in ORDERINGS
    }
    return TriadReport(
        x=x, y=y, z=z,
        e_x=e_x, e_y=e_y, e_z=e_z,
        locally_associative=e_x.is_empty and e_y.is_empty and e_z.is_empty,
        per_order_verdicts=verdicts,
    )


def is_locally_associative(x: SigmaSet, y: SigmaSet, z: SigmaSet) -> bool:
    """True iff E = {∅}; checked against all six orderings."""
    report = triad_system(x, y, z)
    exhaustive = all(report.per_order_verdicts.values())
    if report.locally_associative != exhaustive:
        raise ContractViolation(
            f"triad system ({report.locally_associative}) disagrees with the six-order check "
            f"({exhaustive}) on {x}, {y}, {z}"
        )
    return report.locally_associative


def first_non_local_triple(members: Iterable[SigmaSet]) -> Optional[TriadReport]:
    """Triad report of the first ordered triple (with repetition) that is not locally associative."""
    pool = list(members)
    for x, y, z in product(pool, repeat=3):
        if not is_locally_associative(x, y, z):
            report = triad_system(x, y, z)
            logger.debug("triple %s, %s, %s fails at %s", x, y, z, report.witness_order)
            return report
    return None


def is_locally_associative_family(members: Iterable[SigmaSet]) -> bool:
    return first_non_local_triple(members) is None


# -------------------- identities --------------------

def check_reversal(a: SigmaSet, b: SigmaSet, c: SigmaSet) -> bool:
    """If (A ∪ B) ∪ C = A ∪ (B ∪ C) then →ABC = →CBA. Vacuously true otherwise."""
    if not direct_associative(a, b, c):
        return True
    return chain_value((a, b, c)) == chain_value(reversed_chain((a, b, c)))


def check_chain_antiset(chain: ChainLike) -> bool:
    """(→ABC)* = →A*B*C*, for chains of any length."""
    return antiset(chain_value(chain)) == chain_value(starred_chain(chain))

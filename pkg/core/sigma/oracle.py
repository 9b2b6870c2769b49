"""
Oracle
σ-set calculus – brute-force enumerators and reference implementations

Used by the test suite and by the equation solver's fallback. Nothing in
here calls into fusion.py, so agreement with it is evidence rather than
tautology.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import product
from typing import Iterator, List, Optional

from core.errors import OracleInfeasibleError
from core.models import MAX_UNIVERSE_BASES, Atom, Polarity, SigmaSet, Universe

# Per-base states, in enumeration order.
_STATES = (None, Polarity.PLAIN, Polarity.ANTI)


def check_feasible(size: int, limit: int = MAX_UNIVERSE_BASES) -> None:
    limit = min(limit, MAX_UNIVERSE_BASES)
    if size > limit:
        raise OracleInfeasibleError(size, limit)


def iter_sigma_sets(u: Universe, limit: int = MAX_UNIVERSE_BASES) -> Iterator[SigmaSet]:
    """Lazily yield the 3^n canonical σ-sets over `u` (each base absent, plain or anti)."""
    check_feasible(len(u), limit)
    for states in product(_STATES, repeat=len(u)):
        yield SigmaSet(frozenset(
            Atom(base, state) for base, state in zip(u.bases, states) if state is not None
        ))


def enumerate_sigma_sets(u: Universe, limit: int = MAX_UNIVERSE_BASES) -> List[SigmaSet]:
    """All 3^n canonical σ-sets over `u`, deterministic order, first element ∅."""
    return list(iter_sigma_sets(u, limit))


def reference_fuse(x: SigmaSet, y: SigmaSet) -> SigmaSet:
    """
    Fusion by a different route: multiset union, then cancel equal-base
    opposite-polarity pairs one for one; survivors collapse to set semantics.
    """
    plain: Counter = Counter()
    anti: Counter = Counter()
    for atom in list(x.atoms) + list(y.atoms):
        (anti if atom.polarity is Polarity.ANTI else plain)[atom.base] += 1

    survivors = set()
    for base in set(plain) | set(anti):
        cancelled = min(plain[base], anti[base])
        if plain[base] - cancelled > 0:
            survivors.add(Atom(base, Polarity.PLAIN))
        if anti[base] - cancelled > 0:
            survivors.add(Atom(base, Polarity.ANTI))
    return SigmaSet(frozenset(survivors))


def random_sigma_set(rng: random.Random, u: Universe, density: Optional[float] = None) -> SigmaSet:
    """Uniform over the 3^n σ-sets of `u` unless a presence `density` is given."""
    atoms = set()
    for base in u.bases:
        if density is None:
            state = rng.choice(_STATES)
        else:
            state = rng.choice(_STATES[1:]) if rng.random() < density else None
        if state is not None:
            atoms.add(Atom(base, state))
    return SigmaSet(frozenset(atoms))

"""
Fusion primitives
σ-set calculus – canonical construction and the four base operations

Provides:
- make_sigma_set: dedupe then annihilate x/x* pairs
- hat_intersect (X ∩̂ Y) and star_diff (X ⊛ Y)
- fuse: the annihilating union (X ⊛ Y) ∪ (Y ⊛ X)
- antiset: pointwise starring
- the antielement-free family predicate
- parse_atom / parse_sigma_set for the textual `{a, b*}` syntax
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Set, Tuple

from core.errors import AtomSyntaxError, ContractViolation
from core.models import EMPTY, Atom, Polarity, SigmaSet


def make_sigma_set(raw: Iterable[Atom]) -> SigmaSet:
    """
    Build a canonical σ-set.

    Duplicates collapse first; then every base present with both polarities
    loses BOTH of its atoms ({x, x*} = ∅).

    Raises:
        AtomSyntaxError: if an element is not an Atom (string elements are
        parsed with parse_atom, so malformed symbols are reported by name).
    """
    unique: Set[Atom] = set()
    for item in raw:
        if isinstance(item, str):
            item = parse_atom(item)
        elif not isinstance(item, Atom):
            raise AtomSyntaxError(repr(item), "not an atom")
        unique.add(item)
    doomed = {a.base for a in unique if a.anti() in unique}
    return SigmaSet(frozenset(a for a in unique if a.base not in doomed))


def hat_intersect(x: SigmaSet, y: SigmaSet) -> SigmaSet:
    """X ∩̂ Y: the atoms of X whose antielement is a member of Y."""
    return SigmaSet(frozenset(a for a in x.atoms if a.anti() in y.atoms))


def star_diff(x: SigmaSet, y: SigmaSet) -> SigmaSet:
    """X ⊛ Y := X - X ∩̂ Y."""
    return SigmaSet(x.atoms - hat_intersect(x, y).atoms)


def fuse(x: SigmaSet, y: SigmaSet) -> SigmaSet:
    """
    Fusion X ∪ Y = {x : x ∈ X ⊛ Y or x ∈ Y ⊛ X}.

    Commutative, ∅ is the identity, idempotent; not associative in general.
    """
    atoms = star_diff(x, y).atoms | star_diff(y, x).atoms
    # Canonical inputs cannot leave an annihilating pair behind.
    if any(a.anti() in atoms for a in atoms):
        raise ContractViolation(f"fusion of {x} and {y} left an annihilating pair")
    return SigmaSet(atoms)


def antiset(x: SigmaSet) -> SigmaSet:
    """X*: every atom's polarity flipped."""
    return SigmaSet(frozenset(a.anti() for a in x.atoms))


def find_af_violation(family: Sequence[SigmaSet]) -> Optional[Tuple[SigmaSet, SigmaSet]]:
    """First ordered pair (A, B), diagonal included, with A ∩̂ B ≠ ∅; None when the family is AF."""
    for a in family:
        for b in family:
            if not hat_intersect(a, b).is_empty:
                return (a, b)
    return None


def is_antielement_free_family(family: Sequence[SigmaSet]) -> bool:
    """True iff A ∩̂ B = ∅ for every ordered pair of members."""
    return find_af_violation(family) is None


# -------------------- textual syntax --------------------

def parse_atom(text: str) -> Atom:
    """'a' -> plain atom a, 'a*' -> anti atom a*."""
    symbol = (text or "").strip()
    if symbol.endswith("*"):
        return Atom(symbol[:-1], Polarity.ANTI)
    if symbol == "":
        raise AtomSyntaxError(text, "atom symbol must be a non-empty string")
    return Atom(symbol, Polarity.PLAIN)


def parse_sigma_set(text: str) -> SigmaSet:
    """Parse a set literal such as '{1, 2*}', '{}' or '0'."""
    s = (text or "").strip()
    if s == "0":
        return EMPTY
    if not (s.startswith("{") and s.endswith("}")):
        raise AtomSyntaxError(s, "set literal must be enclosed in braces")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    return make_sigma_set(parse_atom(part) for part in body.split(","))

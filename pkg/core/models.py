"""
core/models.py
Shared data models for the σ-set calculus.

Atoms carry a base symbol and a polarity (x or x*). A SigmaSet is a finite,
canonical set of atoms: it never holds both x and x*, since {x, x*} = ∅.
All models are frozen; every operation in core.sigma returns new values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from core.errors import AtomSyntaxError, OracleInfeasibleError, UsageError

# Largest universe the brute-force oracle will enumerate (3**16 candidates).
MAX_UNIVERSE_BASES = 16

_BASE_RE = re.compile(r"\w+")


class Polarity(Enum):
    PLAIN = 0
    ANTI = 1

    def flipped(self) -> "Polarity":
        return Polarity.ANTI if self is Polarity.PLAIN else Polarity.PLAIN


def validate_base(base: str) -> str:
    """Return `base` unchanged if it is a legal atom symbol, otherwise raise AtomSyntaxError."""
    if not isinstance(base, str) or base == "":
        raise AtomSyntaxError(str(base), "atom symbol must be a non-empty string")
    if "*" in base:
        raise AtomSyntaxError(base, "atom symbol must not contain '*'")
    if not _BASE_RE.fullmatch(base):
        raise AtomSyntaxError(base, "atom symbol must be an identifier")
    return base


@dataclass(frozen=True)
class Atom:
    base: str
    polarity: Polarity = Polarity.PLAIN

    def __post_init__(self):
        validate_base(self.base)

    @property
    def is_anti(self) -> bool:
        return self.polarity is Polarity.ANTI

    def anti(self) -> "Atom":
        """The antielement: x -> x*, x* -> x."""
        return Atom(self.base, self.polarity.flipped())

    def sort_key(self) -> Tuple[str, int]:
        # lexicographic by base, plain before anti
        return (self.base, self.polarity.value)

    def __str__(self) -> str:
        return f"{self.base}*" if self.is_anti else self.base


EMPTY_ATOMS: FrozenSet[Atom] = frozenset()


@total_ordering
@dataclass(frozen=True)
class SigmaSet:
    """
    Canonical finite σ-set.

    Build these with core.sigma.make_sigma_set (which collapses duplicates and
    annihilates x/x* pairs). The constructor only accepts atoms that are
    already canonical and raises UsageError otherwise.
    """

    atoms: FrozenSet[Atom] = EMPTY_ATOMS

    def __post_init__(self):
        if not isinstance(self.atoms, frozenset):
            object.__setattr__(self, "atoms", frozenset(self.atoms))
        seen: Dict[str, Polarity] = {}
        for atom in self.atoms:
            other = seen.setdefault(atom.base, atom.polarity)
            if other is not atom.polarity:
                raise UsageError(
                    f"σ-set is not canonical: both {atom.base} and {atom.base}* present"
                )

    # -- views --------------------------------------------------------------

    def sorted_atoms(self) -> Tuple[Atom, ...]:
        return tuple(sorted(self.atoms, key=Atom.sort_key))

    @property
    def bases(self) -> FrozenSet[str]:
        return frozenset(a.base for a in self.atoms)

    @property
    def is_empty(self) -> bool:
        return not self.atoms

    def polarity_of(self, base: str) -> Optional[Polarity]:
        for atom in self.atoms:
            if atom.base == base:
                return atom.polarity
        return None

    def sort_key(self) -> Tuple[int, Tuple[Tuple[str, int], ...]]:
        return (len(self.atoms), tuple(a.sort_key() for a in self.sorted_atoms()))

    # -- protocol -----------------------------------------------------------

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.sorted_atoms())

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms

    def __lt__(self, other: "SigmaSet") -> bool:
        if not isinstance(other, SigmaSet):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.sorted_atoms()) + "}"


EMPTY = SigmaSet()


@dataclass(frozen=True)
class FusionChain:
    """Ordered sequence of σ-sets, evaluated by left-fold fusion (→ABC = (A ∪ B) ∪ C)."""

    terms: Tuple[SigmaSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise UsageError("a fusion chain needs at least one term")

    @classmethod
    def of(cls, *terms: SigmaSet) -> "FusionChain":
        return cls(tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[SigmaSet]:
        return iter(self.terms)


@dataclass(frozen=True)
class TriadReport:
    """The evaluation-chain system E = {E_X, E_Y, E_Z} of one triple plus direct verdicts."""

    x: SigmaSet
    y: SigmaSet
    z: SigmaSet
    e_x: SigmaSet
    e_y: SigmaSet
    e_z: SigmaSet
    locally_associative: bool
    per_order_verdicts: Dict[str, bool] = field(default_factory=dict)

    @property
    def failing_orders(self) -> Tuple[str, ...]:
        return tuple(order for order, ok in self.per_order_verdicts.items() if not ok)

    @property
    def witness_order(self) -> Optional[str]:
        failing = self.failing_orders
        return failing[0] if failing else None

    def operands(self, order: str) -> Tuple[SigmaSet, SigmaSet, SigmaSet]:
        """The triple rearranged by an ordering label such as 'YXZ'."""
        named = {"X": self.x, "Y": self.y, "Z": self.z}
        return tuple(named[letter] for letter in order)  # type: ignore[return-value]


# -------------------- group contexts --------------------

@dataclass(frozen=True)
class GroupWitness:
    flag: str                                   # identity | antiset | fusion | local_associativity
    sets: Tuple[SigmaSet, ...] = ()             # the offending member(s)
    ordering: Optional[str] = None              # failing ordering for local_associativity


@dataclass(frozen=True)
class GroupReport:
    has_identity: bool
    closed_under_antiset: bool
    closed_under_fusion: bool
    all_triples_locally_associative: bool
    failing_witness: Optional[GroupWitness] = None

    @property
    def is_group(self) -> bool:
        return (
            self.has_identity
            and self.closed_under_antiset
            and self.closed_under_fusion
            and self.all_triples_locally_associative
        )


@dataclass(frozen=True)
class GroupContext:
    members: Tuple[SigmaSet, ...]
    report: GroupReport

    @property
    def is_group(self) -> bool:
        return self.report.is_group


# -------------------- equations --------------------

class SolveStatus(Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no_solution"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of A ∪ X = B: the candidate B ∪ A* plus how it was verified."""

    a: SigmaSet
    b: SigmaSet
    status: SolveStatus
    candidate: SigmaSet
    verified: bool
    residual: Optional[SigmaSet] = None          # fuse(A, candidate) when not verified
    oracle_solutions: Optional[int] = None       # set when the oracle was consulted

    @property
    def solved(self) -> bool:
        return self.status is SolveStatus.SOLVED


# -------------------- oracle universes --------------------

@dataclass(frozen=True)
class Universe:
    """Ordered set of base symbols the oracle enumerates over."""

    bases: Tuple[str, ...] = ()

    def __post_init__(self):
        bases = tuple(dict.fromkeys(validate_base(b) for b in self.bases))
        if len(bases) > MAX_UNIVERSE_BASES:
            raise OracleInfeasibleError(len(bases), MAX_UNIVERSE_BASES)
        object.__setattr__(self, "bases", bases)

    @classmethod
    def of(cls, *sets: SigmaSet) -> "Universe":
        """The bases used by `sets`, sorted."""
        return cls(tuple(sorted(set().union(*(s.bases for s in sets)))))

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> "Universe":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.bases)

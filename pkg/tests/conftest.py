"""Shared fixtures: σ-set literals, oracle universes and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from core.models import Atom, Polarity, SigmaSet, Universe
from core.sigma import enumerate_sigma_sets, parse_sigma_set


def sset(text: str) -> SigmaSet:
    """'{1, 2*}' -> SigmaSet"""
    return parse_sigma_set(text)


def sigma_sets(bases=("1", "2", "3", "4", "5", "6")):
    """Strategy for canonical σ-sets: each base absent, plain or anti."""
    states = st.sampled_from((None, Polarity.PLAIN, Polarity.ANTI))
    return st.tuples(*(states for _ in bases)).map(
        lambda picked: SigmaSet(frozenset(
            Atom(base, state) for base, state in zip(bases, picked) if state is not None
        ))
    )


@pytest.fixture(scope="session")
def u2() -> Universe:
    return Universe(("1", "2"))


@pytest.fixture(scope="session")
def u3() -> Universe:
    return Universe(("1", "2", "3"))


@pytest.fixture(scope="session")
def sets2(u2):
    return enumerate_sigma_sets(u2)


@pytest.fixture(scope="session")
def sets3(u3):
    return enumerate_sigma_sets(u3)

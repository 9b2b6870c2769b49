import random

import pytest
from hypothesis import given

from core.errors import AtomSyntaxError
from core.models import EMPTY, Atom, Polarity, Universe
from core.sigma import (
    antiset,
    find_af_violation,
    fuse,
    hat_intersect,
    is_antielement_free_family,
    make_sigma_set,
    parse_atom,
    parse_sigma_set,
    random_sigma_set,
    reference_fuse,
    star_diff,
)
from tests.conftest import sigma_sets, sset


# -------------------- worked examples --------------------

def test_make_sigma_set_annihilates_pairs():
    assert make_sigma_set(["1", "1*"]) == EMPTY
    assert make_sigma_set([]) == EMPTY
    assert make_sigma_set(["a", "a", "b*"]) == sset("{a, b*}")
    assert make_sigma_set([Atom("x"), Atom("x", Polarity.ANTI), Atom("y")]) == sset("{y}")


@pytest.mark.parametrize("item", [1, None, ("a", "PLAIN")])
def test_make_sigma_set_rejects_non_atoms(item):
    with pytest.raises(AtomSyntaxError, match="not an atom"):
        make_sigma_set(["a", item])


def test_hat_intersect_examples():
    assert hat_intersect(sset("{1, 2}"), sset("{1*, 2*}")) == sset("{1, 2}")
    assert hat_intersect(sset("{1, 2}"), EMPTY) == EMPTY
    assert hat_intersect(sset("{1, 2*}"), sset("{1*, 2*}")) == sset("{1}")


def test_star_diff_examples():
    assert star_diff(sset("{1, 2}"), sset("{1*, 2*}")) == EMPTY
    assert star_diff(sset("{1, 2}"), EMPTY) == sset("{1, 2}")
    assert star_diff(sset("{1, 2*}"), sset("{1*}")) == sset("{2*}")


def test_fuse_examples():
    assert fuse(sset("{1, 2}"), sset("{1*, 2*}")) == EMPTY
    assert fuse(sset("{1, 2}"), EMPTY) == sset("{1, 2}")
    assert fuse(sset("{1}"), sset("{1, 2}")) == sset("{1, 2}")
    assert fuse(sset("{1*, 2*}"), sset("{1}")) == sset("{2*}")


def test_antiset_examples():
    assert antiset(sset("{a, b}")) == sset("{a*, b*}")
    assert antiset(EMPTY) == EMPTY
    assert antiset(sset("{1, 2*}")) == sset("{1*, 2}")


def test_antielement_free_family_examples():
    assert is_antielement_free_family([sset("{1, 2}"), sset("{3}")])
    assert not is_antielement_free_family([sset("{1, 2}"), sset("{1*, 2*}")])
    assert is_antielement_free_family([sset("{1}"), sset("{1}")])
    assert find_af_violation([sset("{3}"), sset("{1, 2}"), sset("{1*}")]) == (sset("{1, 2}"), sset("{1*}"))


# -------------------- textual syntax --------------------

def test_parse_atom():
    assert parse_atom("a*") == Atom("a", Polarity.ANTI)
    assert parse_atom(" β ") == Atom("β")
    for bad in ("", "*", "a**"):
        with pytest.raises(AtomSyntaxError):
            parse_atom(bad)


def test_parse_sigma_set_forms():
    assert parse_sigma_set("{}") == EMPTY
    assert parse_sigma_set("0") == EMPTY
    assert parse_sigma_set("{ 1 , 1* , 2 }") == sset("{2}")
    with pytest.raises(AtomSyntaxError):
        parse_sigma_set("1, 2")


# -------------------- algebraic laws --------------------

def _check_pair_laws(x, y):
    assert fuse(x, y) == fuse(y, x)
    assert fuse(x, EMPTY) == x
    assert fuse(x, x) == x
    assert fuse(x, antiset(x)) == EMPTY
    assert antiset(antiset(x)) == x
    assert antiset(fuse(x, y)) == fuse(antiset(x), antiset(y))
    assert fuse(x, y) == reference_fuse(x, y)


def test_laws_over_every_pair_of_three_bases(sets3):
    assert len(sets3) == 27
    for x in sets3:
        for y in sets3:
            _check_pair_laws(x, y)


def test_laws_over_random_pairs_of_six_bases():
    rng = random.Random(20241017)
    u = Universe(("a", "b", "c", "d", "e", "f"))
    for _ in range(10_000):
        _check_pair_laws(random_sigma_set(rng, u), random_sigma_set(rng, u))


@given(sigma_sets(), sigma_sets())
def test_hat_intersect_and_star_diff_partition(x, y):
    hat, rest = hat_intersect(x, y), star_diff(x, y)
    assert hat.atoms | rest.atoms == x.atoms
    assert not hat.atoms & rest.atoms


@given(sigma_sets(), sigma_sets())
def test_fusion_only_removes_opposed_atoms(x, y):
    fused = fuse(x, y)
    for atom in fused:
        assert atom in x.atoms | y.atoms
        assert atom.anti() not in x.atoms | y.atoms

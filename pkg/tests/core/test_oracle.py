import random

import pytest

from core.errors import OracleInfeasibleError
from core.models import EMPTY, Universe
from core.sigma import enumerate_sigma_sets, fuse, iter_sigma_sets, random_sigma_set, reference_fuse
from core.sigma.oracle import check_feasible
from tests.conftest import sset


def test_enumeration_sizes_and_order(u2, sets3):
    sets = enumerate_sigma_sets(u2)
    assert len(sets) == 9
    assert sets[0] == EMPTY
    assert len(set(sets)) == 9
    assert len(sets3) == 27
    assert list(iter_sigma_sets(Universe(()))) == [EMPTY]


def test_reference_fuse_cancels_pairs():
    assert reference_fuse(sset("{1, 2}"), sset("{1*, 2*}")) == EMPTY
    assert reference_fuse(sset("{1, 2}"), sset("{1*}")) == sset("{2}")
    assert reference_fuse(sset("{1}"), sset("{1}")) == sset("{1}")


def test_reference_fuse_matches_on_every_pair(sets3):
    for x in sets3:
        for y in sets3:
            assert reference_fuse(x, y) == fuse(x, y)


def test_feasibility_bound():
    check_feasible(16)
    with pytest.raises(OracleInfeasibleError):
        check_feasible(17)
    with pytest.raises(OracleInfeasibleError):
        check_feasible(3, limit=2)
    with pytest.raises(OracleInfeasibleError):
        enumerate_sigma_sets(Universe(("a", "b")), limit=1)


def test_random_sigma_set_stays_in_universe():
    rng = random.Random(7)
    u = Universe(("a", "b", "c"))
    for _ in range(200):
        s = random_sigma_set(rng, u)
        assert s.bases <= set(u.bases)
    assert random_sigma_set(rng, u, density=0.0) == EMPTY
    assert len(random_sigma_set(rng, u, density=1.0)) == 3

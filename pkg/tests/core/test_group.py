from itertools import product

import pytest

from core.errors import OracleInfeasibleError, UsageError
from core.models import EMPTY, SolveStatus, Universe
from core.sigma import (
    brute_force_solve,
    cancellation_applies,
    check_group,
    enumerate_sigma_sets,
    fuse,
    replay_witness,
    solve_fusion_equation,
)
from tests.conftest import sset


# -------------------- group contexts --------------------

def test_trivial_family_is_a_group():
    ctx = check_group([EMPTY])
    assert ctx.is_group
    assert ctx.report.failing_witness is None


def test_set_with_its_antiset_fails_local_associativity():
    family = [EMPTY, sset("{1}"), sset("{1*}")]
    report = check_group(family).report
    assert report.has_identity
    assert report.closed_under_antiset
    assert report.closed_under_fusion
    assert not report.all_triples_locally_associative
    assert report.failing_witness.flag == "local_associativity"
    assert report.failing_witness.sets == (sset("{1}"), sset("{1}"), sset("{1*}"))
    assert replay_witness(report.failing_witness, family) is False


def test_missing_inverse_is_the_first_witness():
    family = [EMPTY, sset("{1, 2}"), sset("{1*, 2*}"), sset("{1}")]
    ctx = check_group(family)
    assert not ctx.is_group
    assert not ctx.report.closed_under_antiset
    assert not ctx.report.closed_under_fusion
    assert ctx.report.failing_witness.flag == "antiset"
    assert ctx.report.failing_witness.sets == (sset("{1}"),)
    assert replay_witness(ctx.report.failing_witness, family) is False


def test_missing_identity():
    ctx = check_group([sset("{1}")])
    assert ctx.report.failing_witness.flag == "identity"
    assert not ctx.report.has_identity


@pytest.mark.parametrize("n", [1, 2])
def test_full_universe_fails_only_local_associativity(n):
    family = enumerate_sigma_sets(Universe(tuple("12"[:n])))
    report = check_group(family).report
    assert report.has_identity and report.closed_under_antiset and report.closed_under_fusion
    assert not report.all_triples_locally_associative
    assert replay_witness(report.failing_witness, family) is False


def test_group_members_are_deduplicated_and_sorted():
    ctx = check_group([sset("{1}"), EMPTY, sset("{1}")])
    assert ctx.members == (EMPTY, sset("{1}"))


def test_empty_family_is_rejected():
    with pytest.raises(UsageError):
        check_group([])


# -------------------- equations --------------------

def test_solve_worked_example():
    a, b = sset("{α, β}"), sset("{a*, b*, c*, α, β}")
    result = solve_fusion_equation(a, b)
    assert result.status is SolveStatus.SOLVED
    assert result.candidate == sset("{a*, b*, c*}")
    assert result.verified
    assert fuse(a, result.candidate) == b


def test_solve_identity_and_unsolvable():
    assert solve_fusion_equation(EMPTY, sset("{1, 2}")).candidate == sset("{1, 2}")
    result = solve_fusion_equation(sset("{1}"), sset("{1*}"))
    assert result.status is SolveStatus.NO_SOLUTION
    assert not result.verified
    assert result.residual == EMPTY
    assert result.oracle_solutions == 0


def test_solve_oracle_bound():
    with pytest.raises(OracleInfeasibleError) as exc:
        solve_fusion_equation(sset("{1}"), sset("{1*}"), max_bases=0)
    assert exc.value.candidate == sset("{1*}")
    # a verified candidate never needs the oracle
    assert solve_fusion_equation(sset("{1}"), sset("{1, 2}"), max_bases=0).solved


def test_brute_force_examples():
    solutions = brute_force_solve(sset("{α, β}"), sset("{a*, b*, c*, α, β}"), ["a", "b", "c", "α", "β"])
    assert sset("{a*, b*, c*}") in solutions
    assert len(solutions) == 4
    assert brute_force_solve(EMPTY, EMPTY, []) == {EMPTY}
    assert brute_force_solve(sset("{1}"), sset("{1*}"), ["1"]) == set()


def test_solver_agrees_with_oracle_on_every_pair(sets2, u2):
    assert len(sets2) == 9
    for a, b in product(sets2, repeat=2):
        result = solve_fusion_equation(a, b)
        assert result.solved == bool(brute_force_solve(a, b, u2))
        if result.solved:
            assert fuse(a, result.candidate) == b


def test_cancellation_guarantees_the_candidate(sets2):
    for a, b in product(sets2, repeat=2):
        if cancellation_applies(a, b):
            assert solve_fusion_equation(a, b).solved
    assert cancellation_applies(sset("{1}"), sset("{2}"))
    assert not cancellation_applies(sset("{α, β}"), sset("{a*, b*, c*, α, β}"))

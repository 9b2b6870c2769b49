import logging
import random
from itertools import product

import pytest

from core.models import EMPTY, Universe
from core.sigma import chain_value, random_sigma_set
from lang import EvaluationError, NonAssociativeChainError, Session, evaluate, parse, parse_expression
from lang.nodes import ExprStatement
from tests.conftest import sset


def run(source, **kwargs):
    session = Session(**kwargs)
    return session, session.run(source)


def test_bindings_and_operations():
    session, outcomes = run("X = {1, 2}\nY = anti(X)\nX & Y\nX \\ Y\nX + Y\n{1, 1*}")
    assert [o.kind for o in outcomes] == ["binding", "binding", "expr", "expr", "expr", "expr"]
    assert [o.value for o in outcomes[2:]] == [sset("{1, 2}"), EMPTY, EMPTY, EMPTY]
    assert session.env == {"X": sset("{1, 2}"), "Y": sset("{1*, 2*}")}


def test_unbound_variable():
    with pytest.raises(EvaluationError, match="unbound variable 'Q'"):
        run("{1} + Q")


def test_evaluate_does_not_mutate_the_environment():
    env = {"A": sset("{1}")}
    (stmt,) = parse("B = A + {2}")
    outcome, new_env = evaluate(stmt, env)
    assert env == {"A": sset("{1}")}
    assert new_env["B"] == sset("{1, 2}")
    assert outcome.name == "B"


# -------------------- solve --------------------

def test_solve_binds_the_variable():
    session, outcomes = run("A = {α, β}\nB = {a*, b*, c*, α, β}\nsolve X in A + X = B\nA + X")
    solve = outcomes[2]
    assert solve.ok
    assert solve.solve.candidate == sset("{a*, b*, c*}")
    assert session.env["X"] == sset("{a*, b*, c*}")
    assert outcomes[3].value == sset("{a*, b*, c*, α, β}")


def test_solve_with_variable_on_the_left():
    _, outcomes = run("solve X in X + {1} = {1, 2}")
    assert outcomes[0].solve.candidate == sset("{2}")


def test_unsolvable_equation_does_not_bind():
    session, outcomes = run("solve X in {1} + X = {1*}")
    assert not outcomes[0].ok
    assert "X" not in session.env


@pytest.mark.parametrize("source, fragment", [
    ("solve X in {1} + {2} = {1}", "does not occur"),
    ("solve X in X + X = {1}", "occurs 2 times"),
    ("solve X in anti(X) + {1} = {1}", "direct operand"),
    ("solve X in {1} + X = X", "right side"),
    ("solve X in {1} + {2} + X = {1}", "not associative"),
])
def test_solve_shape_errors(source, fragment):
    with pytest.raises(EvaluationError, match=fragment):
        run(source)


@pytest.mark.parametrize("source, expected", [
    ("solve X in ({1} + {2}) + X = {1, 2, 3}", "{3}"),
    ("solve X in {1} + (X) = {1, 2}", "{2}"),
    ("solve X in ({1} + X) = {1, 2}", "{2}"),
])
def test_solve_accepts_parenthesised_terms(source, expected):
    _, (outcome,) = run(source, strict=True)
    assert outcome.ok
    assert outcome.solve.candidate == sset(expected)


# -------------------- chains --------------------

def test_non_associative_chain_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="lang"):
        _, outcomes = run("{1, 2} + {1*, 2*} + {1}")
    assert outcomes[0].value == sset("{1}")
    assert len(outcomes[0].warnings) == 1
    assert "not locally associative" in caplog.text


def test_strict_mode_rejects_the_chain():
    with pytest.raises(NonAssociativeChainError):
        run("{1, 2} + {1*, 2*} + {1}", strict=True)


def test_parenthesised_chain_is_not_checked():
    _, outcomes = run("({1, 2} + {1*, 2*}) + {1}", strict=True)
    assert outcomes[0].value == sset("{1}")
    assert outcomes[0].warnings == ()


def test_associative_chain_is_quiet():
    _, outcomes = run("{a, b} + {a*, b*} + {c, d}", strict=True)
    assert outcomes[0].value == sset("{c, d}")
    assert outcomes[0].warnings == ()


def test_left_fold_law(sets2):
    for a, b, c in product(sets2, repeat=3):
        env = {"A": a, "B": b, "C": c}
        outcome, _ = evaluate(ExprStatement(parse_expression("A + B + C")), env)
        assert outcome.value == chain_value([a, b, c])


def test_literal_round_trip():
    rng = random.Random(11)
    u = Universe(("1", "2", "x", "α", "in", "solve"))
    for _ in range(1000):
        s = random_sigma_set(rng, u)
        outcome, _ = evaluate(ExprStatement(parse_expression(str(s))), {})
        assert outcome.value == s


# -------------------- checks and witnesses --------------------

def replay(text):
    return Session().run(text)[0]


def test_assoc_check_witness_replays():
    _, (outcome,) = run("assoc({1}, {1}, {1*})")
    report = outcome.check
    assert not report.verdict
    assert report.details == {"e_s": "{1*}", "left": "{}", "right": "{1}"}
    left, right = (replay(text).value for text in report.witness.replay)
    assert left != right


def test_assoc_check_passes_for_the_plain_variant():
    _, (outcome,) = run("assoc({1, 2}, {1*, 2*}, {1})")
    assert outcome.check.verdict
    assert outcome.check.witness is None


def test_localassoc_witness_ordering():
    _, (outcome,) = run("localassoc({1, 2}, {1*, 2*}, {1, 2})")
    report = outcome.check
    assert not report.verdict
    assert report.details["e_x"] == "{}"
    assert report.details["failing_orders"] == "YXZ,YZX,ZXY,XZY"
    assert report.witness.ordering == "YXZ"
    assert report.witness.replay[0] == "assoc({1*, 2*}, {1, 2}, {1, 2})"
    assert replay(report.witness.replay[0]).check.verdict is False


def test_group_check_witness_replays():
    _, (outcome,) = run("group(0, {1}, {1*})")
    report = outcome.check
    assert not report.verdict
    assert report.details["closed_under_fusion"] is True
    assert report.witness.replay == ("localassoc({1}, {1}, {1*})",)
    assert replay(report.witness.replay[0]).check.verdict is False


def test_group_check_antiset_witness():
    _, (outcome,) = run("group(0, {1, 2}, {1*, 2*}, {1})")
    assert outcome.check.witness.replay == ("anti({1})",)
    assert outcome.check.details["members"] == 4


def test_af_check():
    _, outcomes = run("af({1, 2}, {3})\naf({1, 2}, {1*})")
    assert outcomes[0].ok
    witness = outcomes[1].check.witness
    assert witness.replay == ("{1, 2} & {1*}",)
    assert replay(witness.replay[0]).value == sset("{1}")


def test_session_reset():
    session, _ = run("A = {1}")
    session.reset()
    assert session.env == {}


@pytest.mark.parametrize("source", [
    "assoc({1}, {1}, {1*})",
    "localassoc({1, 2}, {1*, 2*}, {1, 2})",
    "group({1})",
    "group(0, {1})",
    "group(0, {1}, {1*}, {2}, {2*})",
    "group(0, {1}, {1*})",
    "af({1, 2}, {1*})",
])
def test_witnesses_replay_under_strict_mode(source):
    _, (outcome,) = run(source, strict=True)
    assert outcome.check.verdict is False
    for text in outcome.check.witness.replay:
        (replayed,) = Session(strict=True).run(text)
        assert replayed.warnings == ()

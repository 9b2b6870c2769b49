import pytest

from core.errors import AtomSyntaxError, OracleInfeasibleError, UsageError
from core.models import EMPTY, Atom, FusionChain, Polarity, SigmaSet, Universe
from tests.conftest import sset


def test_atom_str_and_anti():
    a = Atom("a")
    assert str(a) == "a"
    assert str(a.anti()) == "a*"
    assert a.anti().anti() == a
    assert a.anti().is_anti


@pytest.mark.parametrize("bad", ["", "a*", "a b", "-"])
def test_atom_rejects_malformed_bases(bad):
    with pytest.raises(AtomSyntaxError) as exc:
        Atom(bad)
    assert exc.value.symbol == bad


def test_greek_bases_are_identifiers():
    assert str(Atom("α", Polarity.ANTI)) == "α*"


def test_sigma_set_rejects_non_canonical_atoms():
    with pytest.raises(UsageError):
        SigmaSet({Atom("1"), Atom("1", Polarity.ANTI)})


def test_sigma_set_display_order():
    assert str(sset("{b*, a, c}")) == "{a, b*, c}"
    assert str(EMPTY) == "{}"


def test_sigma_set_ordering_is_by_size_then_atoms():
    ordered = sorted([sset("{1, 2}"), sset("{1*}"), EMPTY, sset("{1}")])
    assert ordered == [EMPTY, sset("{1}"), sset("{1*}"), sset("{1, 2}")]


def test_sigma_set_views():
    s = sset("{a, b*}")
    assert s.bases == {"a", "b"}
    assert s.polarity_of("b") is Polarity.ANTI
    assert s.polarity_of("z") is None
    assert Atom("a") in s
    assert len(s) == 2
    assert [str(a) for a in s] == ["a", "b*"]


def test_empty_chain_is_rejected():
    with pytest.raises(UsageError):
        FusionChain(())
    assert len(FusionChain.of(EMPTY, EMPTY)) == 2


def test_universe_dedupes_and_bounds():
    assert Universe(("a", "b", "a")).bases == ("a", "b")
    assert Universe.of(sset("{b, a*}"), sset("{c}")).bases == ("a", "b", "c")
    with pytest.raises(OracleInfeasibleError) as exc:
        Universe(tuple(f"s{i}" for i in range(17)))
    assert exc.value.size == 17
    assert exc.value.limit == 16

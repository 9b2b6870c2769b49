from scripts import exhaustive_sweep


def test_sweeps_find_no_discrepancies():
    for bases in (1, 2):
        summary = exhaustive_sweep.run_sweeps(bases)
        assert set(summary) == {
            "laws", "evaluation chain", "triad system", "identities",
            "antielement-free triples", "solver vs oracle",
        }
        assert not any(summary.values())


def test_main_prints_summary(capsys):
    assert exhaustive_sweep.main(["--bases", "1"]) == 0
    assert "Discrepancies over 1 base(s)" in capsys.readouterr().out

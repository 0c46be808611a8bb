import json

import pytest

from resgames import __version__
from resgames.cli import main, run
from resgames.gamefile import dump_game, fixture_names, fixture_path, load_game, loads_game
from resgames.logic import EMPTY, FragmentError, bag
from resgames.syntax import ParseError


def fx(name):
    return str(fixture_path(name))


def code(*argv):
    return run(list(argv))[0].exit_code


def doc(*argv):
    report, as_json = run(list(argv) + ["--json"])
    assert as_json
    return report.exit_code, json.loads(report.render(True))


def test_prove_exit_codes():
    assert code("prove", "--mode", "affine", "A, B |- A") == 0
    assert code("prove", "--mode", "linear", "A, B |- A") == 1
    assert code("prove", "A &") == 2
    assert code("prove", "--mode", "linear", "--fragment", "mll", "A & B |- A") == 2


def test_json_schema():
    rc, d = doc("prove", "--mode", "affine", "A, B |- A")
    assert rc == 0
    assert {"command", "inputs", "verdict", "stats", "version"} <= set(d)
    assert d["verdict"] is True and d["version"] == __version__
    assert {"queries", "cache_hits", "wall_ms"} <= set(d["stats"])


def test_trace_is_printed():
    report, _ = run(["prove", "--mode", "affine", "--trace", "H2O, H2O, H2O * H2O -o H2 * H2 * O2 |- O2"])
    text = report.render(False)
    assert "[-oL]" in text and "[ax]" in text


def test_equilibria_table():
    report, _ = run(["equilibria", fx("elim"), "--pref", "dichotomous"])
    lines = [l for l in report.render(False).splitlines() if l.startswith("NE")]
    assert len(lines) == 4
    assert any("goal of 1, goal of 2" in l for l in lines)
    assert report.exit_code == 0
    assert code("equilibria", fx("h"), "--pref", "parsimonious") == 1


def test_nash_and_eliminate():
    assert code("nash", fx("elim"), "--profile", "1: A; 2: B") == 0
    assert code("nash", fx("h"), "--pref", "parsimonious", "--profile", "1:; 2:") == 1
    assert code("eliminate", fx("elim"), "--profile", "1:; 2:") == 0
    assert code("eliminate", fx("elim"), "--profile", "1: A; 2: B") == 1


def test_construct_witness():
    rc, d = doc("construct", fx("h"), "--pref", "parsimonious", "--profile", "1: A; 2: A")
    assert rc == 0 and d["verdict"] is True
    assert "witness" in d
    flat = json.dumps(d["witness"])
    assert "A" in flat


def test_coop_queries():
    rc, d = doc("coop", fx("aigcrg-basic"), "--table")
    assert rc == 0
    report, _ = run(["coop", fx("breakfast"), "--veto"])
    assert "2" in report.render(False)
    assert code("coop", fx("breakfast"), "--core", "0,1,0") == 0
    assert code("coop", fx("breakfast"), "--core", "1,0,0") == 1
    assert code("coop", fx("aigcrg-basic"), "--coalition", "2,3") == 0
    assert code("coop", fx("aigcrg-basic"), "--coalition", "1,2") == 1
    assert code("coop", fx("aigcrg-basic"), "--model", "mnigcrg", "--veto") == 2


def test_caps_and_budget_exit_3():
    assert code("equilibria", fx("alanfish"), "--limit-profiles", "4") == 3
    full = "a: H2O -o ~T, H2O * H2O -o H2 * H2 * O2; f: H2O, H2O, H2O"
    assert code("construct", fx("alanfish"), "--pref", "parsimonious", "--limit-pool", "2", "--profile", full) == 3
    heavy = ", ".join(["A"] * 9 + ["B -o C"] * 3) + " |- " + " * ".join(["A"] * 9) + " * C * C * D"
    assert code("prove", "--prover-budget-ms", "0", heavy) == 3


def test_usage_errors():
    assert code("nash", fx("elim")) == 2
    assert code("prove", "--bogus", "A |- A") == 2
    assert code("nash", "missing.rg", "--profile", "1:") == 2
    assert code("nash", fx("elim"), "--profile", "1: B; 2:") == 2
    assert code() == 2


def test_jobs_do_not_change_output():
    a, _ = run(["equilibria", fx("alanfish")])
    b, _ = run(["equilibria", fx("alanfish"), "--jobs", "4"])
    assert a.lines == b.lines


def test_validate_reports_pool_and_profiles():
    report, _ = run(["validate", fx("divorce")])
    text = report.render(False)
    assert "4 resources" in text and "profiles: 12" in text
    assert report.exit_code == 0


def test_main_prints(capsys):
    assert main(["prove", "--mode", "affine", "A, B |- A"]) == 0
    assert "provable" in capsys.readouterr().out


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip(name):
    g = load_game(fixture_path(name))
    assert loads_game(dump_game(g)) == g


def test_divorce_file():
    g = load_game(fixture_path("divorce"))
    assert g.players == ("a", "b")
    assert g.pool() == bag("aclock", "flour", "flour", "flour -o bread")


def test_empty_endowment_player():
    g = loads_game("logic: affine mall\nplayer 1 goal: A endow:\nplayer 2 goal: A * A endow: A, A\n")
    assert g.endowments[0] == EMPTY


def test_fragment_violation_in_file():
    with pytest.raises(FragmentError):
        loads_game("logic: linear mll\nplayer 1 goal: A & B endow: A\n")


def test_parse_error_has_line():
    with pytest.raises(ParseError) as info:
        loads_game("logic: affine mall\n# note\nplayer 1 goal: A * endow: A\n")
    assert info.value.line == 3


def test_logic_line_beats_flags(tmp_path):
    path = tmp_path / "g.rg"
    path.write_text("logic: affine mall\nplayer 1 goal: A endow: A, B\n")
    rc, d = doc("nash", str(path), "--mode", "linear", "--profile", "1: A, B")
    assert rc == 0 and d["inputs"]["mode"] == "affine mall"

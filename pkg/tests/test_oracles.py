import pytest

from resgames.gamefile import fixture_path, load_game, parse_profile
from resgames.games import DICHOTOMOUS, PARSIMONIOUS, profiles
from resgames.logic import AFFINE_MALL, EMPTY, LINEAR_MALL, bag
from resgames.model import Game
from resgames.oracles import (
    OracleReport,
    oracle_constructible,
    oracle_eliminable,
    oracle_is_nash,
    oracle_prove_smallcheck,
    oracle_redistributions,
)
from resgames.syntax import parse_formula, parse_sequent


def fixture(name):
    return load_game(fixture_path(name))


def test_smallcheck_examples():
    assert oracle_prove_smallcheck(parse_sequent("A, B |- A"), AFFINE_MALL)
    assert not oracle_prove_smallcheck(parse_sequent("A, B |- A"), LINEAR_MALL)
    assert not oracle_prove_smallcheck(parse_sequent("A |- A * A"), LINEAR_MALL)
    assert oracle_prove_smallcheck(parse_sequent("A * B |- B * A"), LINEAR_MALL)


def test_smallcheck_size_bound():
    with pytest.raises(ValueError):
        oracle_prove_smallcheck(parse_sequent("A, B, C, D, E |- A * B * C"), LINEAR_MALL)


def test_oracle_nash_examples():
    g = fixture("elim")
    assert oracle_is_nash(g, parse_profile(g, "1: A; 2: B"), DICHOTOMOUS)
    h = fixture("h")
    assert not any(oracle_is_nash(h, p, PARSIMONIOUS) for p in profiles(h))


def test_oracle_elimination_examples():
    g = fixture("elim")
    assert oracle_eliminable(g, g.empty_profile(), DICHOTOMOUS)
    assert not oracle_eliminable(g, g.full_profile(), DICHOTOMOUS)


def test_oracle_construction_examples():
    h = fixture("h")
    assert oracle_constructible(h, parse_profile(h, "1: A; 2: A"), PARSIMONIOUS)
    g = fixture("elim")
    assert oracle_constructible(g, g.full_profile(), DICHOTOMOUS)


def test_oracle_redistributions_dedupe():
    assert len(oracle_redistributions((bag("A"), bag("A")))) == 3
    assert oracle_redistributions((EMPTY, EMPTY)) == [(EMPTY, EMPTY)]


def test_oracle_rejects_large_games():
    a = parse_formula("A")
    g = Game(("1",), (a,), (bag(*["A"] * 7),), AFFINE_MALL)
    with pytest.raises(ValueError):
        oracle_is_nash(g, g.empty_profile(), DICHOTOMOUS)


def test_report():
    r = OracleReport("A |- A", True, True)
    assert r.agree and str(r).startswith("agree")
    bad = OracleReport("x", True, False)
    assert not bad.agree and "DISAGREE" in str(bad)


def test_oracles_do_not_import_algorithms():
    import resgames.oracles as o

    source = open(o.__file__).read()
    for name in ("resgames.prover", "resgames.games", "resgames.coop"):
        assert name not in source

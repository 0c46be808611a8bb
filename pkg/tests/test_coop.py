import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from resgames.coop import CoalitionGame, CoalitionModel, ModelMismatch, PayoffVector
from resgames.gamefile import fixture_path, load_game
from resgames.logic import AFFINE_MALL, EMPTY, Atom, LINEAR_MALL, ResourceBag, bag
from resgames.model import Game

from strategies import formulas, tiny_games

SLOW = dict(deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])

EXAMPLE5 = [0, 1, 0, 1, 0, 1, 1, 1]
EXAMPLE6 = [0, 1, 0, 1, 1, 2, 2, 3]


def coop(name, model="aigcrg", mode=None):
    g = load_game(fixture_path(name))
    if mode is not None:
        g = Game(g.players, g.goals, g.endowments, mode)
    return CoalitionGame(g, model)


def values(cg):
    return [v for _, v in cg.table()]


@pytest.mark.parametrize("mode", [None, AFFINE_MALL])
def test_example5_table(mode):
    cg = coop("aigcrg-basic", mode=mode)
    assert [c for c, _ in cg.table()] == [(), ("1",), ("2",), ("3",), ("1", "2"), ("1", "3"), ("2", "3"), ("1", "2", "3")]
    assert values(cg) == EXAMPLE5


@pytest.mark.parametrize("mode", [None, AFFINE_MALL])
def test_example6_table(mode):
    assert values(coop("aigcrg-basic", "mnigcrg", mode)) == EXAMPLE6


def test_example5_is_not_monotone():
    cg = coop("aigcrg-basic")
    assert cg.value(["1"]) == 1 and cg.value(["1", "2"]) == 0


def test_canperform_examples():
    cg = coop("aigcrg-basic")
    assert cg.canperform(["2", "3"], bag("A * A", "A"))
    assert cg.canperform([], EMPTY)
    r = coop("remark1")
    assert r.canperform(["1"], bag("A", "B"))
    assert r.canperform(["2"], bag("A", "C"))
    assert not r.canperform(["1", "2"], bag("A", "B", "C"))


def test_goal_sets_examples():
    cg = coop("aigcrg-basic", "mnigcrg")
    assert cg.goal_sets(["2"]) == [EMPTY]
    assert cg.goal_sets([]) == [EMPTY]
    assert bag("A", "A") in cg.goal_sets(["1", "3"])


def test_coalition_order_is_normalized():
    cg = coop("aigcrg-basic")
    assert cg.coalition(["3", "1"]) == ("1", "3")
    assert cg.value(["3", "2"]) == cg.value(["2", "3"])


def test_breakfast():
    cg = coop("breakfast")
    assert cg.winning_coalitions() == [("2",), ("1", "2"), ("1", "2", "3")]
    assert cg.veto_players() == ("2",)
    assert cg.in_core((0, 1, 0))
    assert not cg.in_core((1, 0, 0))


def test_breakfast_third_player_changes_some_value():
    # v({2}) = 1 but v({2,3}) = 0, so player 3 is not a dummy in the strict sense
    cg = coop("breakfast")
    assert cg.value(["2"]) == 1 and cg.value(["2", "3"]) == 0
    assert cg.dummy_players() == ()


def test_breakfast_core_on_grid():
    cg = coop("breakfast")
    steps = [i / 10 for i in range(11)]
    members = []
    for a, b in itertools.product(steps, steps):
        c = round(1 - a - b, 10)
        if c < -1e-12:
            continue
        p = (a, b, max(c, 0.0))
        if cg.in_core(p):
            members.append(p)
    assert members and all(abs(p[1] - 1) < 1e-9 for p in members)


def test_example5_veto_and_dummy():
    cg = coop("aigcrg-basic")
    assert cg.veto_players() == ()
    assert cg.dummy_players() == ()


def test_degenerate_games():
    g = Game(("1", "2"), (Atom("A"), Atom("A")), (EMPTY, EMPTY), LINEAR_MALL)
    cg = CoalitionGame(g)
    assert values(cg) == [0, 0, 0, 0]
    assert cg.veto_players() == ("1", "2")
    assert cg.dummy_players() == ("1", "2")
    assert cg.in_core((0, 0))
    assert not cg.in_core((0.5, -0.5))


def test_simple_game_only_operations():
    cg = coop("aigcrg-basic", "mnigcrg")
    for op in (cg.winning_coalitions, cg.veto_players, lambda: cg.in_core((1, 1, 1))):
        with pytest.raises(ModelMismatch):
            op()
    assert cg.model is CoalitionModel.MNIGCRG


def test_payoff_vector():
    cg = coop("breakfast")
    assert PayoffVector((0, 1, 0)).efficient(cg)
    assert not PayoffVector((0.5, 0.4, 0)).efficient(cg)
    with pytest.raises(ValueError):
        cg.in_core((1, 0))


def _subsets(players):
    return [c for k in range(len(players) + 1) for c in itertools.combinations(players, k)]


goal_bags = st.lists(formulas(max_size=3, atoms=("A", "B")), max_size=2).map(ResourceBag)


@settings(max_examples=100, **SLOW)
@given(tiny_games(max_players=3, max_pool=3), goal_bags)
def test_canperform_monotone_in_coalition(g, goals):
    cg = CoalitionGame(g)
    for c1 in _subsets(g.players):
        if cg.canperform(c1, goals):
            for c2 in _subsets(g.players):
                if set(c1) <= set(c2):
                    assert cg.canperform(c2, goals)


@settings(max_examples=100, **SLOW)
@given(tiny_games(max_players=3, max_pool=3), goal_bags, goal_bags)
def test_canperform_superadditive(g, p1, p2):
    cg = CoalitionGame(g)
    for c1 in _subsets(g.players):
        rest = [p for p in g.players if p not in c1]
        for c2 in _subsets(rest):
            if cg.canperform(c1, p1) and cg.canperform(c2, p2):
                assert cg.canperform(c1 + c2, p1 + p2)
                if g.mode.affine:
                    assert cg.canperform(c1 + c2, p1.union(p2))


@settings(max_examples=100, **SLOW)
@given(tiny_games(max_players=3, max_pool=3))
def test_mnigcrg_monotone_and_superadditive(g):
    cg = CoalitionGame(g, "mnigcrg")
    v = dict(cg.table())
    assert v[()] == 0
    for c1 in v:
        for c2 in v:
            if set(c1) <= set(c2):
                assert v[c1] <= v[c2]
            if not set(c1) & set(c2):
                assert v[c1] + v[c2] <= v[cg.coalition(c1 + c2)]


@settings(max_examples=50, **SLOW)
@given(tiny_games(max_players=3, max_pool=3, mode=LINEAR_MALL) | tiny_games(max_players=3, max_pool=3, mode=AFFINE_MALL))
def test_simple_game_core_is_spread_over_veto_players(g):
    cg = CoalitionGame(g)
    if cg.value(cg.players) != 1:
        return
    veto = set(cg.veto_players())
    grid = [i / 2 for i in range(3)]
    for p in itertools.product(grid, repeat=g.n):
        expected = abs(sum(p) - 1) < 1e-9 and all(
            x == 0 for who, x in zip(cg.players, p) if who not in veto
        )
        assert cg.in_core(p) == expected

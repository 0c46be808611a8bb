"""
Coalitions
==========

Groups pool their endowments. In the all-or-nothing model a coalition
is worth 1 when it can meet every member's goal at once; in the
counting model it is worth the largest number of goals it can meet.
"""

from resgames import CoalitionGame, bag, fixture_path, load_game

base = load_game(fixture_path("aigcrg-basic"))
for model in ("aigcrg", "mnigcrg"):
    cg = CoalitionGame(base, model)
    print(model, [(",".join(c) or "-", v) for c, v in cg.table()])

# bacon, eggs and an omelet
bf = CoalitionGame(load_game(fixture_path("breakfast")))
print("winning:", bf.winning_coalitions())
print("veto:", bf.veto_players())
print("dummy:", bf.dummy_players())
print("(0,1,0) in core:", bf.in_core((0, 1, 0)))

# pooling is not free without weakening
r = CoalitionGame(load_game(fixture_path("remark1")))
print(r.canperform(["1"], bag("A", "B")), r.canperform(["2"], bag("A", "C")))
print(r.canperform(["1", "2"], bag("A", "B", "C")))

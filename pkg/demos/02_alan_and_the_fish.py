"""
Alan and the fish
=================

Alan can drink water (D) and run one electrolysis (E); the fish holds
three waters. Alan wants oxygen for the fish and a quenched thirst,
the fish just wants oxygen.
"""

from resgames import (
    DICHOTOMOUS,
    PARSIMONIOUS,
    all_equilibria,
    fixture_path,
    is_nash,
    load_game,
    parse_formula,
    rationally_constructible,
    satisfied,
)

g = load_game(fixture_path("alanfish"))

# every profile, with who gets what they want
for p in all_equilibria(g, DICHOTOMOUS):
    print("NE", g.format_profile(p), "satisfied:", satisfied(g, p))

# parsimonious players keep everything to themselves
print([g.format_profile(p) for p in all_equilibria(g, PARSIMONIOUS)])

# an arbitrator may move resources around first
ok, w = rationally_constructible(g, g.full_profile(), PARSIMONIOUS)
print("constructible:", ok)
print("  redistribute to", g.format_profile(w.redistribution))
print("  then play      ", g.format_profile(w.profile))

# a gentler redistribution: Alan keeps D and the water, the fish gets E
d = parse_formula("H2O -o ~T")
h = g.with_endowments((g.endowments[1].add(d), g.endowments[0].remove(d)))
print(g.format_profile(h.endowment()), is_nash(h, h.full_profile(), PARSIMONIOUS))

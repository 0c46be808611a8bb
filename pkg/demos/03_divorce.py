"""
A divorce settlement
====================

Ann wants bread and holds the alarm clock. Bernard wants the alarm
clock and holds two years of flour and the breadmaker. Left alone,
nobody gives anything.
"""

from resgames import (
    PARSIMONIOUS,
    all_equilibria,
    fixture_path,
    load_game,
    parse_profile,
    rationally_constructible,
    rationally_eliminable,
    satisfied,
)

g = load_game(fixture_path("divorce"))
print([g.format_profile(p) for p in all_equilibria(g, PARSIMONIOUS)])

# can a judge break the deadlock?
print("eliminable:", rationally_eliminable(g, g.empty_profile(), PARSIMONIOUS))

target = parse_profile(g, "a: aclock; b: flour, flour -o bread")
ok, w = rationally_constructible(g, target, PARSIMONIOUS)
h = g.with_endowments(w.redistribution)
print("new endowments:", g.format_profile(w.redistribution))
print("equilibria now:", [h.format_profile(p) for p in all_equilibria(h, PARSIMONIOUS)])
print("satisfied:", satisfied(h, w.profile))

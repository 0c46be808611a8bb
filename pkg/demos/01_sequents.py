"""
Proving resource sequents
=========================

Resources are formulas; a sequent asks whether a bag of them can be
turned into a goal. Linear mode spends every resource exactly once,
affine mode may throw leftovers away.
"""

from resgames import AFFINE_MALL, LINEAR_MALL, parse_sequent, prove

# leftovers are fine only when weakening is allowed
s = parse_sequent("A, B |- A")
print(s, "linear:", prove(s, LINEAR_MALL).status.value)
print(s, "affine:", prove(s, AFFINE_MALL).status.value)

# no resource can be copied
print(prove(parse_sequent("A |- A * A"), AFFINE_MALL).status.value)

# a breadmaker turns a year of flour into a year of bread
s = parse_sequent("flour, flour -o bread |- bread")
print(prove(s, LINEAR_MALL).provable)

# electrolysis of two waters, with the proof tree
s = parse_sequent("H2O, H2O, H2O * H2O -o H2 * H2 * O2 |- O2")
result = prove(s, AFFINE_MALL, trace=True)
print(result.trace.render())

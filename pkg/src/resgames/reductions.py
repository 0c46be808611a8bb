"""Games built from a sequent so that a game question answers it.

Each builder turns an intuitionistic sequent ``Gamma |- delta`` into a
small game whose verdict is tied to provability. They make good
metamorphic tests: prover and game algorithms must agree.
"""

from __future__ import annotations

from resgames.logic import EMPTY, ONE, Formula, LogicMode, Lollipop, ResourceBag, tensor_fold
from resgames.model import Game, Profile


def implication(gamma: ResourceBag, delta: Formula) -> Formula:
    """phi = Gamma* -o delta."""
    return Lollipop(tensor_fold(gamma), delta)


def nash_game(gamma: ResourceBag, delta: Formula, mode: LogicMode) -> tuple[Game, Profile]:
    """One player with goal delta holding Gamma and delta (set union).

    The profile contributing Gamma is an equilibrium under dichotomous
    preferences iff Gamma |- delta.
    """
    endow = gamma.union(ResourceBag([delta]))
    g = Game(("1",), (delta,), (endow,), mode)
    return g, Profile((gamma,))


def parsimonious_nash_game(gamma: ResourceBag, delta: Formula, mode: LogicMode) -> tuple[Game, Profile]:
    """One player wanting phi and holding phi.

    Contributing phi is a parsimonious equilibrium iff Gamma does not
    prove delta (the empty contribution would do as well).
    """
    phi = implication(gamma, delta)
    g = Game(("1",), (phi,), (ResourceBag([phi]),), mode)
    return g, Profile((ResourceBag([phi]),))


def elimination_game(gamma: ResourceBag, delta: Formula, mode: LogicMode) -> tuple[Game, Profile]:
    """Player 1 wants phi but holds nothing; player 2 wants 1 and holds phi.

    The empty profile is rationally eliminable iff Gamma does not prove
    delta, for both preference kinds.
    """
    phi = implication(gamma, delta)
    g = Game(("1", "2"), (phi, ONE), (EMPTY, ResourceBag([phi])), mode)
    return g, g.empty_profile()


def construction_game(gamma: ResourceBag, delta: Formula, mode: LogicMode) -> tuple[Game, Profile]:
    """One player wanting and holding phi.

    The empty profile is rationally constructible under dichotomous
    preferences iff Gamma |- delta.
    """
    phi = implication(gamma, delta)
    g = Game(("1",), (phi,), (ResourceBag([phi]),), mode)
    return g, g.empty_profile()

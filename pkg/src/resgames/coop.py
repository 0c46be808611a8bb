"""Coalition games on top of resource games.

A coalition can perform a bag of goals when some part of the members'
pooled endowment proves the tensor of the goals. Two valuations are
offered: all-or-nothing (``aigcrg``) and maximum number of goals
(``mnigcrg``).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from resgames.logic import (
    EMPTY,
    ResGamesError,
    ResourceBag,
    count_multisubsets,
    multisubsets,
    tensor_fold,
)
from resgames.model import DEFAULT_LIMITS, EnumerationCapExceeded, Game, Limits
from resgames.prover import Prover, default_prover

TOLERANCE = 1e-9

Coalition = tuple[str, ...]


class ModelMismatch(ResGamesError):
    """The operation is only defined for simple (0/1) coalition games."""


class CoalitionModel(enum.Enum):
    AIGCRG = "aigcrg"
    MNIGCRG = "mnigcrg"


@dataclass(frozen=True)
class PayoffVector:
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def total(self) -> float:
        return sum(self.values)

    def efficient(self, cg: CoalitionGame) -> bool:
        return abs(self.total() - cg.value(cg.players)) <= TOLERANCE


@dataclass
class CoalitionGame:
    base: Game
    model: CoalitionModel = CoalitionModel.AIGCRG
    prover: Prover = field(default_factory=default_prover)
    limits: Limits = DEFAULT_LIMITS
    _perform: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self.model = CoalitionModel(self.model)

    @property
    def players(self) -> Coalition:
        return self.base.players

    def coalition(self, members: Iterable) -> Coalition:
        """Normalize to declaration order; unknown ids raise GameError."""
        wanted = {self.base.players[self.base.index(m)] for m in members}
        return tuple(p for p in self.base.players if p in wanted)

    def coalitions(self) -> list[Coalition]:
        """All coalitions, by size and then in declaration order."""
        ps = self.base.players
        return [c for k in range(len(ps) + 1) for c in itertools.combinations(ps, k)]

    def endowment_of(self, c: Coalition) -> ResourceBag:
        out = EMPTY
        for m in c:
            out = out + self.base.endowments[self.base.index(m)]
        return out

    def goals_of(self, c: Coalition) -> ResourceBag:
        """The goal multiset of the members; shared goals count twice."""
        return ResourceBag(self.base.goals[self.base.index(m)] for m in c)

    def canperform(self, members: Iterable, goals: ResourceBag) -> bool:
        c = self.coalition(members)
        key = (c, goals)
        hit = self._perform.get(key)
        if hit is not None:
            return hit
        # choosing one sub-endowment per member is the same as choosing a
        # sub-bag of the pooled coalition endowment
        pool = self.endowment_of(c)
        target = tensor_fold(goals)
        mode = self.base.mode
        if mode.affine:
            result = self.prover.entails(pool, target, mode)
        else:
            count = count_multisubsets(pool)
            if count > self.limits.max_profiles:
                raise EnumerationCapExceeded("coalition sub-endowments", count, self.limits.max_profiles)
            subs = sorted(multisubsets(pool), key=len)
            result = any(self.prover.entails(x, target, mode) for x in subs)
        self._perform[key] = result
        return result

    def goal_sets(self, members: Iterable) -> list[ResourceBag]:
        c = self.coalition(members)
        return [g for g in multisubsets(self.goals_of(c)) if self.canperform(c, g)]

    def value(self, members: Iterable) -> int:
        c = self.coalition(members)
        if not c:
            return 0
        goals = self.goals_of(c)
        if self.model is CoalitionModel.AIGCRG:
            return int(self.canperform(c, goals))
        # largest performable sub-bag first; stop at the first hit
        for g in sorted(multisubsets(goals), key=len, reverse=True):
            if self.canperform(c, g):
                return len(g)
        return 0

    def table(self) -> list[tuple[Coalition, int]]:
        return [(c, self.value(c)) for c in self.coalitions()]

    def _require_simple(self) -> None:
        if self.model is not CoalitionModel.AIGCRG:
            raise ModelMismatch("only defined for the all-or-nothing model")

    def winning_coalitions(self) -> list[Coalition]:
        self._require_simple()
        return [c for c, v in self.table() if v == 1]

    def veto_players(self) -> Coalition:
        winning = self.winning_coalitions()
        return tuple(p for p in self.players if all(p in c for c in winning))

    def dummy_players(self) -> Coalition:
        values = dict(self.table())
        dummies = []
        for p in self.players:
            others = [c for c in values if p not in c]
            if all(values[self.coalition(c + (p,))] == values[c] for c in others):
                dummies.append(p)
        return tuple(dummies)

    def in_core(self, payoff: PayoffVector | Sequence[float]) -> bool:
        self._require_simple()
        if not isinstance(payoff, PayoffVector):
            payoff = PayoffVector(tuple(payoff))
        if len(payoff.values) != len(self.players):
            raise ValueError("one payoff per player is required")
        if any(v < -TOLERANCE for v in payoff.values):
            return False
        share = dict(zip(self.players, payoff.values))
        if not payoff.efficient(self):
            return False
        return all(sum(share[m] for m in c) >= v - TOLERANCE for c, v in self.table())

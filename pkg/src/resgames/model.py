"""Individual resource games: players, goals, endowments and profiles."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from resgames.logic import (
    EMPTY,
    Formula,
    LogicMode,
    ResGamesError,
    ResourceBag,
    count_multisubsets,
)

DEFAULT_MAX_POOL = 12
DEFAULT_MAX_PROFILES = 2**20


class GameError(ResGamesError):
    """Malformed game, profile or redistribution."""


class EnumerationCapExceeded(ResGamesError):
    """An exhaustive sweep would exceed its configured size cap."""

    def __init__(self, what: str, count: int, cap: int):
        self.what = what
        self.count = count
        self.cap = cap
        super().__init__(f"{what}: {count} exceeds the cap of {cap}")


class PrefKind(enum.Enum):
    DICHOTOMOUS = "dichotomous"
    PARSIMONIOUS = "parsimonious"


@dataclass(frozen=True)
class Limits:
    max_pool: int = DEFAULT_MAX_POOL
    max_profiles: int = DEFAULT_MAX_PROFILES


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class Profile:
    """One contribution bag per player, in the game's player order."""

    contributions: tuple[ResourceBag, ...]

    def __post_init__(self):
        object.__setattr__(self, "contributions", tuple(self.contributions))

    def __getitem__(self, i: int) -> ResourceBag:
        return self.contributions[i]

    def __len__(self) -> int:
        return len(self.contributions)

    def __iter__(self) -> Iterator[ResourceBag]:
        return iter(self.contributions)

    def outcome(self) -> ResourceBag:
        out = EMPTY
        for c in self.contributions:
            out = out + c
        return out

    def replace(self, i: int, c: ResourceBag) -> Profile:
        cs = list(self.contributions)
        cs[i] = c
        return Profile(tuple(cs))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.contributions) + ")"


# a redistribution is structurally the same thing: one bag per player
Redistribution = Profile


@dataclass(frozen=True)
class Game:
    players: tuple[str, ...]
    goals: tuple[Formula, ...]
    endowments: tuple[ResourceBag, ...]
    mode: LogicMode = LogicMode()

    def __post_init__(self):
        object.__setattr__(self, "players", tuple(str(p) for p in self.players))
        object.__setattr__(self, "goals", tuple(self.goals))
        object.__setattr__(self, "endowments", tuple(self.endowments))
        n = len(self.players)
        if n < 1:
            raise GameError("a game needs at least one player")
        if len(set(self.players)) != n:
            raise GameError("duplicate player ids")
        if len(self.goals) != n or len(self.endowments) != n:
            raise GameError("one goal and one endowment per player are required")
        for g in self.goals:
            self.mode.check(g)
        for e in self.endowments:
            for f in e.support():
                self.mode.check(f)

    @classmethod
    def build(cls, spec: Mapping[str, tuple[Formula, Iterable[Formula]]], mode: LogicMode = LogicMode()) -> Game:
        """``Game.build({"1": (goal, [f, ...]), ...})`` in mapping order."""
        players = tuple(spec)
        return cls(
            players,
            tuple(spec[p][0] for p in players),
            tuple(ResourceBag(spec[p][1]) for p in players),
            mode,
        )

    @property
    def n(self) -> int:
        return len(self.players)

    def index(self, player) -> int:
        try:
            return self.players.index(str(player))
        except ValueError:
            raise GameError(f"unknown player {player!r}") from None

    def pool(self) -> ResourceBag:
        out = EMPTY
        for e in self.endowments:
            out = out + e
        return out

    def endowment(self) -> Redistribution:
        return Profile(self.endowments)

    def with_endowments(self, eps: Redistribution | Sequence[ResourceBag]) -> Game:
        """The game G^eps' over the same players and goals."""
        eps = tuple(eps)
        if len(eps) != self.n:
            raise GameError("redistribution has the wrong number of players")
        new_pool = EMPTY
        for e in eps:
            new_pool = new_pool + e
        if new_pool != self.pool():
            raise GameError("not a redistribution: pooled resources differ")
        return Game(self.players, self.goals, eps, self.mode)

    def profile(self, contributions: Mapping[str, ResourceBag] | Sequence[ResourceBag]) -> Profile:
        """Build and validate a profile; a mapping may omit players (empty bag)."""
        if isinstance(contributions, Mapping):
            for k in contributions:
                self.index(k)
            cs = tuple(contributions.get(p, EMPTY) for p in self.players)
        else:
            cs = tuple(contributions)
        p = Profile(cs)
        self.check_profile(p)
        return p

    def check_profile(self, p: Profile) -> None:
        if len(p) != self.n:
            raise GameError("profile has the wrong number of players")
        for who, c, e in zip(self.players, p, self.endowments):
            if not c <= e:
                raise GameError(f"player {who} contributes {c}, which is not within its endowment {e}")

    def empty_profile(self) -> Profile:
        return Profile(tuple(EMPTY for _ in self.players))

    def full_profile(self) -> Profile:
        return Profile(self.endowments)

    def profile_count(self) -> int:
        return math.prod(count_multisubsets(e) for e in self.endowments)

    def format_profile(self, p: Profile) -> str:
        return "; ".join(f"{who}: {', '.join(str(f) for f in c)}".rstrip() for who, c in zip(self.players, p))

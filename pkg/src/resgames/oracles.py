"""Brute-force reference implementations, for tests only.

Nothing here imports the prover or the game algorithms; only the data
types are shared. Each function restates its definition literally and
is meant for tiny inputs, hence the hard-coded bounds.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from resgames.logic import (
    Formula,
    LogicMode,
    Lollipop,
    Neg,
    One,
    Plus,
    ResourceBag,
    Sequent,
    Tensor,
    Top,
    With,
    sort_key,
)
from resgames.model import Game, PrefKind, Profile

MAX_SEQUENT_SIZE = 8
MAX_PLAYERS = 3
MAX_POOL = 6

Entails = Callable[[ResourceBag, Formula, LogicMode], bool]


@dataclass(frozen=True)
class OracleReport:
    instance: str
    optimized: object
    oracle: object

    @property
    def agree(self) -> bool:
        return self.optimized == self.oracle

    def __str__(self) -> str:
        flag = "agree" if self.agree else "DISAGREE"
        return f"{flag}: {self.instance}: optimized={self.optimized!r} oracle={self.oracle!r}"


# -- sequents ---------------------------------------------------------------

def _canon(fs) -> tuple:
    return tuple(sorted(fs, key=sort_key))


def _drop(side: tuple, i: int) -> tuple:
    return side[:i] + side[i + 1:]


def _halves(side: tuple):
    # every sub-multiset chosen by index, duplicates removed
    seen = set()
    for mask in itertools.product((0, 1), repeat=len(side)):
        a = _canon(f for f, m in zip(side, mask) if m)
        b = _canon(f for f, m in zip(side, mask) if not m)
        if (a, b) not in seen:
            seen.add((a, b))
            yield a, b


def _premise_sets(left: tuple, right: tuple, affine: bool):
    """Every rule instance with this conclusion, as a list of premises."""
    if len(left) == 1 and left == right:
        yield []
    if not left and len(right) == 1 and isinstance(right[0], One):
        yield []
    if any(isinstance(f, Top) for f in right):
        yield []
    if affine:
        for i in range(len(left)):
            yield [(_drop(left, i), right)]
        for i in range(len(right)):
            yield [(left, _drop(right, i))]
    for i, f in enumerate(left):
        rest = _drop(left, i)
        match f:
            case One():
                yield [(rest, right)]
            case Neg(a):
                yield [(rest, _canon(right + (a,)))]
            case Tensor(a, b):
                yield [(_canon(rest + (a, b)), right)]
            case With(a, b):
                yield [(_canon(rest + (a,)), right)]
                yield [(_canon(rest + (b,)), right)]
            case Plus(a, b):
                yield [(_canon(rest + (a,)), right), (_canon(rest + (b,)), right)]
            case Lollipop(a, b):
                for l1, l2 in _halves(rest):
                    for r1, r2 in _halves(right):
                        yield [(l1, _canon(r1 + (a,))), (_canon(l2 + (b,)), r2)]
    for i, f in enumerate(right):
        rest = _drop(right, i)
        match f:
            case Neg(a):
                yield [(_canon(left + (a,)), rest)]
            case Lollipop(a, b):
                yield [(_canon(left + (a,)), _canon(rest + (b,)))]
            case With(a, b):
                yield [(left, _canon(rest + (a,))), (left, _canon(rest + (b,)))]
            case Plus(a, b):
                yield [(left, _canon(rest + (a,)))]
                yield [(left, _canon(rest + (b,)))]
            case Tensor(a, b):
                for l1, l2 in _halves(left):
                    for r1, r2 in _halves(rest):
                        yield [(l1, _canon(r1 + (a,))), (l2, _canon(r2 + (b,)))]


def _derivable(left: tuple, right: tuple, affine: bool, memo: dict) -> bool:
    key = (left, right)
    if key in memo:
        return memo[key]
    ok = any(
        all(_derivable(l, r, affine, memo) for l, r in premises)
        for premises in _premise_sets(left, right, affine)
    )
    memo[key] = ok
    return ok


_MEMO: dict[bool, dict] = {True: {}, False: {}}


def oracle_prove_smallcheck(s: Sequent, mode: LogicMode, *, max_size: int | None = MAX_SEQUENT_SIZE) -> bool:
    """Exhaustive cut-free search that tries every rule, including W."""
    if max_size is not None and s.size > max_size:
        raise ValueError(f"sequent of size {s.size} is too large for the oracle")
    return _derivable(_canon(s.left), _canon(s.right), mode.affine, _MEMO[mode.affine])


def smallcheck_entails(context: ResourceBag, goal: Formula, mode: LogicMode) -> bool:
    return oracle_prove_smallcheck(Sequent(context, ResourceBag([goal])), mode, max_size=None)


# -- games --------------------------------------------------------------------

def _sub_bags(b: ResourceBag) -> list[ResourceBag]:
    # index-level subsets, deduplicated
    items = list(b)
    seen = {}
    for mask in itertools.product((0, 1), repeat=len(items)):
        sub = ResourceBag(f for f, m in zip(items, mask) if m)
        seen.setdefault(sub, None)
    return list(seen)


def _union(bags) -> ResourceBag:
    c = Counter()
    for b in bags:
        c.update(b.counts())
    return ResourceBag(dict(c))


def _check_tiny(g: Game) -> None:
    if g.n > MAX_PLAYERS or len(_union(g.endowments)) > MAX_POOL:
        raise ValueError("instance too large for the oracle")


def _prefers(g: Game, i: int, p: Profile, q: Profile, kind: PrefKind, entails: Entails) -> bool:
    sp = entails(_union(p), g.goals[i], g.mode)
    sq = entails(_union(q), g.goals[i], g.mode)
    c1 = not sp and not sq and p[i] <= q[i] and p[i] != q[i]
    c2 = sp and not sq
    c3 = sp and sq and p[i] <= q[i] and p[i] != q[i]
    if kind is PrefKind.DICHOTOMOUS:
        return c2
    return c1 or c2 or c3


def oracle_is_nash(g: Game, p: Profile, kind: PrefKind, entails: Entails = smallcheck_entails) -> bool:
    _check_tiny(g)
    for i in range(g.n):
        for c in _sub_bags(g.endowments[i]):
            dev = Profile(tuple(c if j == i else p[j] for j in range(g.n)))
            if _prefers(g, i, dev, p, kind, entails):
                return False
    return True


def oracle_redistributions(eps) -> list[tuple[ResourceBag, ...]]:
    """Assign every pooled unit to every player, then drop duplicates."""
    eps = tuple(eps)
    units = list(_union(eps))
    seen = {}
    for owners in itertools.product(range(len(eps)), repeat=len(units)):
        r = tuple(ResourceBag(u for u, o in zip(units, owners) if o == j) for j in range(len(eps)))
        seen.setdefault(r, None)
    return list(seen)


def _profiles_with_outcome(g: Game, out: ResourceBag):
    for cs in itertools.product(*(_sub_bags(e) for e in g.endowments)):
        if _union(cs) == out:
            yield Profile(cs)


def oracle_eliminable(g: Game, p: Profile, kind: PrefKind, entails: Entails = smallcheck_entails) -> bool:
    _check_tiny(g)
    out = _union(p)
    for eps in oracle_redistributions(g.endowments):
        h = Game(g.players, g.goals, eps, g.mode)
        if all(not oracle_is_nash(h, q, kind, entails) for q in _profiles_with_outcome(h, out)):
            return True
    return False


def oracle_constructible(g: Game, p: Profile, kind: PrefKind, entails: Entails = smallcheck_entails) -> bool:
    _check_tiny(g)
    out = _union(p)
    for eps in oracle_redistributions(g.endowments):
        h = Game(g.players, g.goals, eps, g.mode)
        if any(oracle_is_nash(h, q, kind, entails) for q in _profiles_with_outcome(h, out)):
            return True
    return False

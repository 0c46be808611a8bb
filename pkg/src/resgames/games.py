"""Equilibria, rational elimination and rational construction.

Every provability question goes through a Prover; a budget exhaustion
there propagates as BudgetExhausted and aborts the whole query.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from resgames.logic import (
    EMPTY,
    Tensor,
    TOP,
    ResourceBag,
    count_multisubsets,
    multisubsets,
)
from resgames.model import (
    DEFAULT_LIMITS,
    EnumerationCapExceeded,
    Game,
    Limits,
    PrefKind,
    Profile,
    Redistribution,
)
from resgames.prover import Prover, default_prover

DICHOTOMOUS = PrefKind.DICHOTOMOUS
PARSIMONIOUS = PrefKind.PARSIMONIOUS


def outcome(p: Profile) -> ResourceBag:
    return p.outcome()


def _sat(g: Game, i: int, resources: ResourceBag, prover: Prover) -> bool:
    return prover.entails(resources, g.goals[i], g.mode)


def satisfied(g: Game, p: Profile, prover: Prover | None = None) -> tuple[str, ...]:
    """Players whose goal follows from out(p)."""
    prover = prover or default_prover()
    out = p.outcome()
    return tuple(who for i, who in enumerate(g.players) if _sat(g, i, out, prover))


def prefers(g: Game, i, p: Profile, q: Profile, kind: PrefKind, prover: Prover | None = None) -> bool:
    """True iff player ``i`` strongly prefers ``p`` over ``q``."""
    prover = prover or default_prover()
    k = g.index(i)
    sp = _sat(g, k, p.outcome(), prover)
    sq = _sat(g, k, q.outcome(), prover)
    if kind is DICHOTOMOUS:
        return sp and not sq
    if sp and not sq:
        return True
    return sp == sq and p[k] < q[k]


def _is_nash_generic(g: Game, p: Profile, kind: PrefKind, prover: Prover) -> bool:
    for k in range(g.n):
        for c in multisubsets(g.endowments[k]):
            if c != p[k] and prefers(g, g.players[k], p.replace(k, c), p, kind, prover):
                return False
    return True


def _is_nash_affine_dichotomous(g: Game, p: Profile, prover: Prover) -> bool:
    # a player unhappy at p has a profitable deviation iff contributing
    # everything works, by weakening
    out = p.outcome()
    for k in range(g.n):
        if _sat(g, k, out, prover):
            continue
        if _sat(g, k, out - p[k] + g.endowments[k], prover):
            return False
    return True


def _is_nash_affine_parsimonious(g: Game, p: Profile, prover: Prover) -> bool:
    out = p.outcome()
    for k in range(g.n):
        if _sat(g, k, out, prover):
            for a in p[k].support():
                if _sat(g, k, out.remove(a), prover):
                    return False
        else:
            if _sat(g, k, out - p[k] + g.endowments[k], prover):
                return False
            if p[k]:
                return False
    return True


def is_nash(g: Game, p: Profile, kind: PrefKind, prover: Prover | None = None, *, generic: bool = False) -> bool:
    """Whether no player strongly prefers a unilateral deviation from ``p``.

    Affine games use the weakening-based shortcuts unless ``generic``.
    """
    prover = prover or default_prover()
    g.check_profile(p)
    if g.mode.affine and not generic:
        if kind is DICHOTOMOUS:
            return _is_nash_affine_dichotomous(g, p, prover)
        return _is_nash_affine_parsimonious(g, p, prover)
    return _is_nash_generic(g, p, kind, prover)


def profiles(g: Game, limits: Limits = DEFAULT_LIMITS) -> Iterator[Profile]:
    """Every profile of ``g``, player by player in sub-bag order."""
    count = g.profile_count()
    if count > limits.max_profiles:
        raise EnumerationCapExceeded("profile space", count, limits.max_profiles)
    choices = [multisubsets(e) for e in g.endowments]
    for cs in itertools.product(*choices):
        yield Profile(cs)


def _parallel_map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def all_equilibria(
    g: Game,
    kind: PrefKind,
    prover: Prover | None = None,
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> list[Profile]:
    """All Nash equilibria, in profile enumeration order."""
    prover = prover or default_prover()
    ps = list(profiles(g, limits))
    verdicts = _parallel_map(lambda p: is_nash(g, p, kind, prover), ps, jobs)
    return [p for p, ok in zip(ps, verdicts) if ok]


def _distributions(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Ways to write m as an ordered sum of n non-negative parts."""
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in _distributions(m - first, n - 1):
            yield (first,) + rest


def count_redistributions(pool: ResourceBag, n: int) -> int:
    return math.prod(math.comb(m + n - 1, n - 1) for _, m in pool.items())


def _assignments(pool: ResourceBag, n: int) -> Iterator[tuple[ResourceBag, ...]]:
    support = pool.items()
    per_formula = [list(_distributions(m, n)) for _, m in support]
    for combo in itertools.product(*per_formula):
        yield tuple(
            ResourceBag({f: parts[j] for (f, _), parts in zip(support, combo)})
            for j in range(n)
        )


def redistributions(eps: Redistribution | Sequence[ResourceBag], limits: Limits = DEFAULT_LIMITS) -> list[Redistribution]:
    """Every redistribution of the pooled endowment, ``eps`` included."""
    eps = tuple(eps)
    pool = EMPTY
    for e in eps:
        pool = pool + e
    if len(pool) > limits.max_pool:
        raise EnumerationCapExceeded("pool size", len(pool), limits.max_pool)
    return [Profile(a) for a in _assignments(pool, len(eps))]


def concentrate(eps: Redistribution | Sequence[ResourceBag], i: int) -> Redistribution:
    """[eps |> i]: the whole pool goes to the player at position ``i``."""
    eps = tuple(eps)
    pool = EMPTY
    for e in eps:
        pool = pool + e
    return Profile(tuple(pool if j == i else EMPTY for j in range(len(eps))))


def _moved(eps: Sequence[ResourceBag], other: Sequence[ResourceBag]) -> int:
    """How many resource units change hands between two redistributions."""
    kept = 0
    for a, b in zip(eps, other):
        ca, cb = a.counts(), b.counts()
        kept += sum(min(m, cb[f]) for f, m in ca.items())
    return sum(len(a) for a in eps) - kept


def _concentrated(g: Game, i: int, out: ResourceBag) -> tuple[Game, Profile]:
    gi = g.with_endowments(concentrate(g.endowments, i))
    return gi, Profile(tuple(out if j == i else EMPTY for j in range(g.n)))


def rationally_eliminable(
    g: Game,
    p: Profile,
    kind: PrefKind,
    prover: Prover | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """Whether some redistribution turns every profile with outcome out(p)
    into a non-equilibrium.

    It suffices to look, for each player i, at the single profile with
    outcome out(p) in the game where i holds the whole pool.
    """
    prover = prover or default_prover()
    g.check_profile(p)
    out = p.outcome()
    pool = g.pool()
    for i in range(g.n):
        if g.mode.affine:
            sat_out = _sat(g, i, out, prover)
            if kind is DICHOTOMOUS:
                if not sat_out and _sat(g, i, pool, prover):
                    return True
                continue
            if not sat_out:
                # giving up any resource is an improvement when unhappy
                if out or _sat(g, i, pool, prover):
                    return True
                continue
            if any(_sat(g, i, out.remove(a), prover) for a in out.support()):
                return True
            continue
        count = count_multisubsets(pool)
        if count > limits.max_profiles:
            raise EnumerationCapExceeded("deviations from the pool", count, limits.max_profiles)
        gi, q = _concentrated(g, i, out)
        if not _is_nash_generic(gi, q, kind, prover):
            return True
    return False


@dataclass(frozen=True)
class Construction:
    redistribution: Redistribution
    profile: Profile






def constructions(g: Game, out: ResourceBag, limits: Limits = DEFAULT_LIMITS) -> list[Construction]:
    """Every (redistribution, profile) pair whose profile yields ``out``,
    ordered by how many resources the redistribution moves."""
    pool = g.pool()
    if len(pool) > limits.max_pool:
        raise EnumerationCapExceeded("pool size", len(pool), limits.max_pool)
    if not out <= pool:
        return []
    rest = pool - out
    count = count_redistributions(out, g.n) * count_redistributions(rest, g.n)
    if count > limits.max_profiles:
        raise EnumerationCapExceeded("redistribution and profile pairs", count, limits.max_profiles)
    found = []
    for cs in _assignments(out, g.n):
        for rs in _assignments(rest, g.n):
            eps = tuple(c + r for c, r in zip(cs, rs))
            found.append(Construction(Profile(eps), Profile(cs)))
    found.sort(key=lambda w: _moved(g.endowments, w.redistribution))
    return found


def rationally_constructible(
    g: Game,
    p: Profile,
    kind: PrefKind,
    prover: Prover | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> tuple[bool, Construction | None]:
    """Whether some redistribution has an equilibrium with outcome out(p).

    Returns the verdict and, when positive, one witness.
    """
    prover = prover or default_prover()
    g.check_profile(p)
    if is_nash(g, p, kind, prover):
        return True, Construction(g.endowment(), p)
    out = p.outcome()
    if kind is DICHOTOMOUS:
        pool = g.pool()
        for i in range(g.n):
            # the tensor with top asks whether some part of the pool proves the goal
            if _sat(g, i, out, prover) or not prover.entails(pool, Tensor(g.goals[i], TOP), g.mode):
                gi, q = _concentrated(g, i, out)
                return True, Construction(gi.endowment(), q)
    for w in constructions(g, out, limits):
        if is_nash(g.with_endowments(w.redistribution), w.profile, kind, prover):
            return True, w
    return False, None

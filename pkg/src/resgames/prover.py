"""Cut-free backward proof search for two-sided (affine) MALL.

The search works on interned formulas: every distinct formula gets an
integer id, and a sequent side is a sorted tuple of ids (a multiset).

Rules are applied in two phases. Invertible rules (~L, ~R, *L, -oR, &R,
+L, 1L) are applied eagerly and never backtracked. The remaining rules
(&L, +R, *R, -oL and the leaves) are tried exhaustively; the binary
multiplicative rules enumerate every split of the context.

In affine mode weakening is not a rule of the search: it is absorbed
into the leaves, which accept any surplus context on either side. Every
rule's premises are strictly smaller than its conclusion (counted in
formula nodes), so the search terminates without a depth bound.
"""

from __future__ import annotations

import enum
import itertools
import threading
import time
from dataclasses import dataclass, field
from typing import Iterator

from resgames.logic import (
    Atom,
    Formula,
    LogicMode,
    Lollipop,
    Neg,
    One,
    Plus,
    ResGamesError,
    ResourceBag,
    Sequent,
    Tensor,
    Top,
    With,
    Weakening,
)

ATOM, ONE, TOP, NEG, TENSOR, WITH, PLUS, LOLLI = range(8)

_KIND = {Atom: ATOM, One: ONE, Top: TOP, Neg: NEG, Tensor: TENSOR, With: WITH, Plus: PLUS, Lollipop: LOLLI}

# kinds whose rule is invertible on each side
_INV_LEFT = frozenset({ONE, NEG, TENSOR, PLUS})
_INV_RIGHT = frozenset({NEG, LOLLI, WITH})

Side = tuple[int, ...]


class BudgetExhausted(ResGamesError):
    """The prover ran out of time, depth or cache budget before deciding."""


class Status(enum.Enum):
    PROVABLE = "provable"
    UNPROVABLE = "unprovable"
    EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class ProverLimits:
    max_depth: int | None = None
    max_cache_entries: int | None = 1_000_000
    budget_ms: float | None = None


@dataclass
class ProverStats:
    queries: int = 0
    nodes: int = 0
    cache_hits: int = 0

    def snapshot(self) -> dict[str, int]:
        return {"queries": self.queries, "nodes": self.nodes, "cache_hits": self.cache_hits}


@dataclass(frozen=True)
class ProofNode:
    rule: str
    sequent: Sequent
    premises: tuple[ProofNode, ...] = ()

    def render(self, indent: int = 0) -> str:
        """Indented text tree, one rule per line, conclusion first."""
        lines = [f"{'  ' * indent}{self.sequent}    [{self.rule}]"]
        for p in self.premises:
            lines.append(p.render(indent + 1))
        return "\n".join(lines)

    def walk(self) -> Iterator[ProofNode]:
        yield self
        for p in self.premises:
            yield from p.walk()


@dataclass(frozen=True)
class ProofResult:
    status: Status
    trace: ProofNode | None = None
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def provable(self) -> bool:
        return self.status is Status.PROVABLE

    @property
    def exhausted(self) -> bool:
        return self.status is Status.EXHAUSTED


def _remove(side: Side, i: int) -> Side:
    return side[:i] + side[i + 1:]


def _insert(side: Side, *ids: int) -> Side:
    return tuple(sorted(side + ids))


def _splits(side: Side) -> Iterator[tuple[Side, Side]]:
    """Every way to cut a multiset into an ordered pair of multisets."""
    groups = [(k, len(list(g))) for k, g in itertools.groupby(side)]
    for picks in itertools.product(*(range(m + 1) for _, m in groups)):
        first: list[int] = []
        second: list[int] = []
        for (k, m), n in zip(groups, picks):
            first.extend([k] * n)
            second.extend([k] * (m - n))
        yield tuple(first), tuple(second)


def _distinct_positions(side: Side, kinds: frozenset[int], nodes: list) -> Iterator[int]:
    last = None
    for i, x in enumerate(side):
        if x != last and nodes[x][0] in kinds:
            yield i
        last = x


class Prover:
    """Provability oracle with a memo cache shared across queries.

    One instance is meant to live for an analysis session. The cache only
    ever holds definitive verdicts, so concurrent writers can only write
    identical values.
    """

    def __init__(self, limits: ProverLimits | None = None):
        self.limits = limits or ProverLimits()
        self.stats = ProverStats()
        self._ids: dict[Formula, int] = {}
        self._formulas: list[Formula] = []
        # id -> (kind, child_a, child_b, size); atoms keep their name in child_a
        self._nodes: list[tuple] = []
        self._lock = threading.RLock()
        self._memo: dict[Weakening, dict[tuple[Side, Side], bool]] = {w: {} for w in Weakening}

    # -- interning -------------------------------------------------------

    def intern(self, f: Formula) -> int:
        i = self._ids.get(f)
        if i is not None:
            return i
        with self._lock:
            i = self._ids.get(f)
            if i is not None:
                return i
            kind = _KIND[type(f)]
            if kind == ATOM:
                node = (ATOM, f.name, None, 1)
            elif kind in (ONE, TOP):
                node = (kind, None, None, 1)
            elif kind == NEG:
                a = self.intern(f.body)
                node = (NEG, a, None, 1 + self._nodes[a][3])
            else:
                a, b = self.intern(f.left), self.intern(f.right)
                node = (kind, a, b, 1 + self._nodes[a][3] + self._nodes[b][3])
            i = len(self._formulas)
            self._formulas.append(f)
            self._nodes.append(node)
            self._ids[f] = i
            return i

    def _side(self, b: ResourceBag) -> Side:
        return tuple(sorted(self.intern(f) for f in b))

    def _sequent(self, left: Side, right: Side) -> Sequent:
        return Sequent(
            ResourceBag(self._formulas[i] for i in left),
            ResourceBag(self._formulas[i] for i in right),
        )

    def cache_size(self) -> int:
        return sum(len(m) for m in self._memo.values())

    def clear_cache(self) -> None:
        for m in self._memo.values():
            m.clear()

    # -- rule table ------------------------------------------------------

    def expansions(self, left: Side, right: Side, affine: bool) -> Iterator[tuple[str, list[tuple[Side, Side]]]]:
        """Yield ``(rule, premises)`` for the rules the search may apply.

        A leaf rule yields an empty premise list. When an invertible rule
        applies, it is the only expansion yielded.
        """
        nodes = self._nodes
        for x in right:
            if nodes[x][0] == TOP:
                yield "topR", []
                return
        if affine:
            if not set(left).isdisjoint(right):
                yield "ax", []
                return
            if any(nodes[x][0] == ONE for x in right):
                yield "1R", []
                return
        else:
            if len(left) == 1 and left == right:
                yield "ax", []
                return
            if not left and len(right) == 1 and nodes[right[0]][0] == ONE:
                yield "1R", []
                return

        for i, x in enumerate(left):
            kind, a, b, _ = nodes[x]
            if kind not in _INV_LEFT:
                continue
            rest = _remove(left, i)
            if kind == ONE:
                yield "1L", [(rest, right)]
            elif kind == NEG:
                yield "~L", [(rest, _insert(right, a))]
            elif kind == TENSOR:
                yield "*L", [(_insert(rest, a, b), right)]
            else:
                yield "+L", [(_insert(rest, a), right), (_insert(rest, b), right)]
            return
        for i, x in enumerate(right):
            kind, a, b, _ = nodes[x]
            if kind not in _INV_RIGHT:
                continue
            rest = _remove(right, i)
            if kind == NEG:
                yield "~R", [(_insert(left, a), rest)]
            elif kind == LOLLI:
                yield "-oR", [(_insert(left, a), _insert(rest, b))]
            else:
                yield "&R", [(left, _insert(rest, a)), (left, _insert(rest, b))]
            return

        for i in _distinct_positions(left, frozenset({WITH}), nodes):
            _, a, b, _ = nodes[left[i]]
            rest = _remove(left, i)
            yield "&L", [(_insert(rest, a), right)]
            yield "&L", [(_insert(rest, b), right)]
        for i in _distinct_positions(right, frozenset({PLUS}), nodes):
            _, a, b, _ = nodes[right[i]]
            rest = _remove(right, i)
            yield "+R", [(left, _insert(rest, a))]
            yield "+R", [(left, _insert(rest, b))]
        for i in _distinct_positions(right, frozenset({TENSOR}), nodes):
            _, a, b, _ = nodes[right[i]]
            rest = _remove(right, i)
            for l1, l2 in _splits(left):
                for r1, r2 in _splits(rest):
                    yield "*R", [(l1, _insert(r1, a)), (l2, _insert(r2, b))]
        for i in _distinct_positions(left, frozenset({LOLLI}), nodes):
            _, a, b, _ = nodes[left[i]]
            rest = _remove(left, i)
            for l1, l2 in _splits(rest):
                for r1, r2 in _splits(right):
                    yield "-oL", [(l1, _insert(r1, a)), (_insert(l2, b), r2)]

    def measure(self, left: Side, right: Side) -> int:
        """Total formula nodes of a sequent; strictly drops along every rule."""
        return sum(self._nodes[x][3] for x in left) + sum(self._nodes[x][3] for x in right)

    # -- search ----------------------------------------------------------

    def _search(self, left: Side, right: Side, weakening: Weakening, deadline: float | None) -> bool:
        memo = self._memo[weakening]
        affine = weakening is Weakening.AFFINE
        max_depth = self.limits.max_depth
        max_cache = self.limits.max_cache_entries
        stats = self.stats

        def provable(l: Side, r: Side, depth: int) -> bool:
            key = (l, r)
            hit = memo.get(key)
            if hit is not None:
                stats.cache_hits += 1
                return hit
            stats.nodes += 1
            if max_depth is not None and depth > max_depth:
                raise BudgetExhausted(f"search depth exceeded {max_depth}")
            if deadline is not None and stats.nodes % 128 == 0 and time.monotonic() > deadline:
                raise BudgetExhausted("prover time budget exhausted")
            result = False
            for _rule, premises in self.expansions(l, r, affine):
                if all(provable(pl, pr, depth + 1) for pl, pr in premises):
                    result = True
                    break
            if max_cache is None or len(memo) < max_cache:
                memo[key] = result
            return result

        return provable(left, right, 0)

    def _trace(self, left: Side, right: Side, weakening: Weakening, deadline: float | None) -> ProofNode:
        affine = weakening is Weakening.AFFINE
        for rule, premises in self.expansions(left, right, affine):
            if all(self._search(pl, pr, weakening, deadline) for pl, pr in premises):
                children = tuple(self._trace(pl, pr, weakening, deadline) for pl, pr in premises)
                return ProofNode(rule, self._sequent(left, right), children)
        raise AssertionError("trace requested for an unprovable sequent")

    def prove(self, s: Sequent, mode: LogicMode, *, trace: bool = False) -> ProofResult:
        """Decide ``s`` in ``mode``; never raises on budget exhaustion.

        Raises FragmentError if ``s`` uses connectives outside the mode's
        fragment.
        """
        for f in s.formulas():
            mode.check(f)
        before = self.stats.snapshot()
        self.stats.queries += 1
        budget = self.limits.budget_ms
        deadline = None if budget is None else time.monotonic() + budget / 1000.0
        left, right = self._side(s.left), self._side(s.right)
        try:
            ok = self._search(left, right, mode.weakening, deadline)
            node = self._trace(left, right, mode.weakening, deadline) if ok and trace else None
        except BudgetExhausted:
            return ProofResult(Status.EXHAUSTED, None, self._delta(before))
        except RecursionError:
            return ProofResult(Status.EXHAUSTED, None, self._delta(before))
        return ProofResult(Status.PROVABLE if ok else Status.UNPROVABLE, node, self._delta(before))

    def _delta(self, before: dict[str, int]) -> dict[str, int]:
        now = self.stats.snapshot()
        return {k: now[k] - before[k] for k in now}

    def entails(self, context: ResourceBag, goal: Formula, mode: LogicMode) -> bool:
        """``context |- goal``; raises BudgetExhausted rather than guess.

        Goals and contexts are not fragment-checked here: games validate
        their formulas once at construction.
        """
        self.stats.queries += 1
        budget = self.limits.budget_ms
        deadline = None if budget is None else time.monotonic() + budget / 1000.0
        try:
            return self._search(self._side(context), (self.intern(goal),), mode.weakening, deadline)
        except RecursionError as exc:
            raise BudgetExhausted("recursion limit reached") from exc


_default = Prover()


def default_prover() -> Prover:
    return _default


def prove(s: Sequent, mode: LogicMode, limits: ProverLimits | None = None, *, trace: bool = False) -> ProofResult:
    """One-shot proof search; a fresh cache unless no limits are given."""
    p = _default if limits is None else Prover(limits)
    return p.prove(s, mode, trace=trace)


def entails_goal(context: ResourceBag, goal: Formula, mode: LogicMode, prover: Prover | None = None) -> bool:
    return (prover or _default).entails(context, goal, mode)

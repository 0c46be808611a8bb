"""Formulas, resource bags and sequents over the reduced MALL grammar.

Only eight node types exist. The derived connectives are definitions:

    bot = ~1        0 = ~top        A | B = ~A -o B

and are rewritten away by the parser, so no other module ever sees them.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class ResGamesError(Exception):
    """Base class for every error raised by this package."""


class FragmentError(ResGamesError):
    """An additive connective (or top) was used under an MLL logic."""


class Formula:
    """Base of the formula tree. Subclasses are frozen dataclasses."""

    __slots__ = ()

    def __str__(self) -> str:
        from resgames.syntax import print_formula

        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class One(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class Tensor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class With(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Plus(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Lollipop(Formula):
    left: Formula
    right: Formula


ONE = One()
TOP = Top()
BOT = Neg(ONE)
ZERO = Neg(TOP)


def par(a: Formula, b: Formula) -> Formula:
    return Lollipop(Neg(a), b)


def size(f: Formula) -> int:
    """Number of nodes in the tree."""
    match f:
        case Atom() | One() | Top():
            return 1
        case Neg(body):
            return 1 + size(body)
        case Tensor(a, b) | With(a, b) | Plus(a, b) | Lollipop(a, b):
            return 1 + size(a) + size(b)
    raise TypeError(f"not a formula: {f!r}")


def depth(f: Formula) -> int:
    match f:
        case Atom() | One() | Top():
            return 0
        case Neg(body):
            return 1 + depth(body)
        case Tensor(a, b) | With(a, b) | Plus(a, b) | Lollipop(a, b):
            return 1 + max(depth(a), depth(b))
    raise TypeError(f"not a formula: {f!r}")


def is_additive_free(f: Formula) -> bool:
    match f:
        case Top() | With() | Plus():
            return False
        case Atom() | One():
            return True
        case Neg(body):
            return is_additive_free(body)
        case Tensor(a, b) | Lollipop(a, b):
            return is_additive_free(a) and is_additive_free(b)
    raise TypeError(f"not a formula: {f!r}")


@lru_cache(maxsize=65536)
def sort_key(f: Formula) -> str:
    """Canonical ordering key: the printed form."""
    from resgames.syntax import print_formula

    return print_formula(f)


class Weakening(enum.Enum):
    LINEAR = "linear"
    AFFINE = "affine"


class Fragment(enum.Enum):
    MLL = "mll"
    MALL = "mall"


@dataclass(frozen=True)
class LogicMode:
    weakening: Weakening = Weakening.AFFINE
    fragment: Fragment = Fragment.MALL

    @property
    def affine(self) -> bool:
        return self.weakening is Weakening.AFFINE

    def check(self, f: Formula) -> None:
        """Raise FragmentError if ``f`` is not a formula of this fragment."""
        if self.fragment is Fragment.MLL and not is_additive_free(f):
            raise FragmentError(f"formula {sort_key(f)!r} uses an additive, not allowed in MLL")

    def __str__(self) -> str:
        return f"{self.weakening.value} {self.fragment.value}"

    @classmethod
    def parse(cls, text: str) -> LogicMode:
        """Read a mode such as ``"affine mall"`` or ``"linear"``."""
        weakening, fragment = Weakening.AFFINE, Fragment.MALL
        for word in text.lower().split():
            if word in ("linear", "affine"):
                weakening = Weakening(word)
            elif word in ("mll", "mall"):
                fragment = Fragment(word)
            else:
                raise ValueError(f"unknown logic keyword {word!r}")
        return cls(weakening, fragment)


LINEAR_MLL = LogicMode(Weakening.LINEAR, Fragment.MLL)
LINEAR_MALL = LogicMode(Weakening.LINEAR, Fragment.MALL)
AFFINE_MLL = LogicMode(Weakening.AFFINE, Fragment.MLL)
AFFINE_MALL = LogicMode(Weakening.AFFINE, Fragment.MALL)


class ResourceBag:
    """Immutable finite multiset of formulas.

    Iteration yields every occurrence, in canonical order (sorted on the
    printed formula). ``+`` is multiset union, ``-`` multiset difference
    and ``<=``/``<`` are (strict) multiset inclusion.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, formulas: Iterable[Formula] | Mapping[Formula, int] = ()):
        counts = Counter()
        if isinstance(formulas, Mapping):
            for f, m in formulas.items():
                if m < 0:
                    raise ValueError("negative multiplicity")
                if m:
                    counts[f] += m
        else:
            for f in formulas:
                if not isinstance(f, Formula):
                    raise TypeError(f"not a formula: {f!r}")
                counts[f] += 1
        self._items = tuple(sorted(counts.items(), key=lambda kv: sort_key(kv[0])))
        self._hash = hash(self._items)

    @classmethod
    def _from_counts(cls, counts: Mapping[Formula, int]) -> ResourceBag:
        return cls({f: m for f, m in counts.items() if m > 0})

    def items(self) -> tuple[tuple[Formula, int], ...]:
        """(formula, multiplicity) pairs in canonical order."""
        return self._items

    def support(self) -> tuple[Formula, ...]:
        return tuple(f for f, _ in self._items)

    def count(self, f: Formula) -> int:
        for g, m in self._items:
            if g == f:
                return m
        return 0

    def counts(self) -> Counter:
        return Counter(dict(self._items))

    def __len__(self) -> int:
        return sum(m for _, m in self._items)

    size = property(__len__)

    def __iter__(self) -> Iterator[Formula]:
        for f, m in self._items:
            for _ in range(m):
                yield f

    def __contains__(self, f: object) -> bool:
        return any(g == f for g, _ in self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResourceBag):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: ResourceBag) -> ResourceBag:
        c = self.counts()
        c.update(other.counts())
        return ResourceBag._from_counts(c)

    def __sub__(self, other: ResourceBag) -> ResourceBag:
        c = self.counts()
        c.subtract(other.counts())
        return ResourceBag._from_counts(c)

    def union(self, other: ResourceBag) -> ResourceBag:
        """Max-multiplicity union (set-like union of multisets)."""
        return ResourceBag._from_counts(self.counts() | other.counts())

    def add(self, f: Formula, times: int = 1) -> ResourceBag:
        c = self.counts()
        c[f] += times
        return ResourceBag._from_counts(c)

    def remove(self, f: Formula) -> ResourceBag:
        c = self.counts()
        if c[f] == 0:
            raise KeyError(f)
        c[f] -= 1
        return ResourceBag._from_counts(c)

    def __le__(self, other: ResourceBag) -> bool:
        oc = other.counts()
        return all(m <= oc[f] for f, m in self._items)

    def __lt__(self, other: ResourceBag) -> bool:
        return self <= other and len(self) < len(other)

    def __ge__(self, other: ResourceBag) -> bool:
        return other <= self

    def __gt__(self, other: ResourceBag) -> bool:
        return other < self

    def __repr__(self) -> str:
        return "{" + ", ".join(sort_key(f) for f in self) + "}"

    __str__ = __repr__


EMPTY = ResourceBag()


def bag(*formulas: Formula | str) -> ResourceBag:
    """Convenience constructor accepting formulas or formula text."""
    from resgames.syntax import parse_formula

    return ResourceBag(parse_formula(f) if isinstance(f, str) else f for f in formulas)


def tensor_fold(b: ResourceBag) -> Formula:
    """Left-associated tensor of the bag in canonical order; 1 when empty."""
    result: Formula | None = None
    for f in b:
        result = f if result is None else Tensor(result, f)
    return ONE if result is None else result


def multisubsets(b: ResourceBag) -> list[ResourceBag]:
    """Every sub-bag, from the empty bag to ``b`` itself.

    There are prod(m_k + 1) of them for multiplicities m_k.
    """
    support = [f for f, _ in b.items()]
    ranges = [range(m + 1) for _, m in b.items()]
    return [
        ResourceBag._from_counts(dict(zip(support, picks)))
        for picks in itertools.product(*ranges)
    ]


def count_multisubsets(b: ResourceBag) -> int:
    n = 1
    for _, m in b.items():
        n *= m + 1
    return n


@dataclass(frozen=True)
class Sequent:
    left: ResourceBag
    right: ResourceBag

    @property
    def intuitionistic(self) -> bool:
        return len(self.right) == 1

    def formulas(self) -> Iterator[Formula]:
        yield from self.left
        yield from self.right

    @property
    def size(self) -> int:
        return sum(size(f) for f in self.formulas())

    def __str__(self) -> str:
        from resgames.syntax import print_sequent

        return print_sequent(self)

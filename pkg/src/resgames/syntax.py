"""Concrete ASCII syntax for formulas and sequents.

Grammar, loosest to tightest::

    formula := lolli
    lolli   := par ("-o" lolli)?          right associative
    par     := plus ("|" plus)*           left associative
    plus    := with ("+" with)*
    with    := tensor ("&" tensor)*
    tensor  := unary ("*" unary)*
    unary   := "~" unary | atom | "1" | "top" | "0" | "bot" | "(" formula ")"

Sequents are written ``F1, F2 |- G1, G2``; either side may be empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from resgames.logic import (
    BOT,
    ONE,
    TOP,
    ZERO,
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
    par,
)

KEYWORDS = frozenset({"top", "bot"})

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<turnstile>\|-)
  | (?P<lolli>-o(?![A-Za-z0-9_]))
  | (?P<op>[*&+|~(),])
  | (?P<unit>[01](?![A-Za-z0-9_]))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class ParseError(ResGamesError):
    """Syntax error carrying a 1-based line/column and the expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "op":
                kind = value
            elif kind == "ident" and value in KEYWORDS:
                kind = value
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


_UNARY_START = frozenset({"~", "ident", "unit", "top", "bot", "("})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, expected: frozenset[str], tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        line, col = _position(self.text, tok.offset)
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {found}", line, col, expected)

    def take(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise self.error(frozenset({_display(kind)}))
        tok = self.tok
        self.i += 1
        return tok

    def formula(self) -> Formula:
        return self.lolli()

    def lolli(self) -> Formula:
        left = self.par()
        if self.tok.kind == "lolli":
            self.i += 1
            return Lollipop(left, self.lolli())
        return left

    def par(self) -> Formula:
        result = self.plus()
        while self.tok.kind == "|":
            self.i += 1
            result = par(result, self.plus())
        return result

    def plus(self) -> Formula:
        result = self.with_()
        while self.tok.kind == "+":
            self.i += 1
            result = Plus(result, self.with_())
        return result

    def with_(self) -> Formula:
        result = self.tensor()
        while self.tok.kind == "&":
            self.i += 1
            result = With(result, self.tensor())
        return result

    def tensor(self) -> Formula:
        result = self.unary()
        while self.tok.kind == "*":
            self.i += 1
            result = Tensor(result, self.unary())
        return result

    def unary(self) -> Formula:
        tok = self.tok
        if tok.kind == "~":
            self.i += 1
            return Neg(self.unary())
        if tok.kind == "ident":
            self.i += 1
            return Atom(tok.text)
        if tok.kind == "unit":
            self.i += 1
            return ONE if tok.text == "1" else ZERO
        if tok.kind == "top":
            self.i += 1
            return TOP
        if tok.kind == "bot":
            self.i += 1
            return BOT
        if tok.kind == "(":
            self.i += 1
            f = self.formula()
            self.take(")")
            return f
        raise self.error(frozenset(_display(k) for k in _UNARY_START))

    def formula_list(self, stop: frozenset[str]) -> list[Formula]:
        if self.tok.kind in stop:
            return []
        result = [self.formula()]
        while self.tok.kind == ",":
            self.i += 1
            result.append(self.formula())
        return result

    def expect_end(self, also: frozenset[str] = frozenset()) -> None:
        if self.tok.kind != "end":
            binary = {"-o", "|", "+", "&", "*"}
            raise self.error(frozenset(binary | also | {"end of input"}))


def _display(kind: str) -> str:
    return {
        "ident": "atom",
        "unit": "1",
        "lolli": "-o",
        "turnstile": "|-",
        "end": "end of input",
    }.get(kind, kind)


def parse_formula(text: str, mode: LogicMode | None = None) -> Formula:
    """Parse one formula; with ``mode`` also enforce its fragment."""
    p = _Parser(text)
    f = p.formula()
    p.expect_end()
    if mode is not None:
        mode.check(f)
    return f


def parse_formula_list(text: str, mode: LogicMode | None = None) -> list[Formula]:
    """Parse a comma separated (possibly empty) list of formulas."""
    p = _Parser(text)
    fs = p.formula_list(frozenset({"end"}))
    p.expect_end(frozenset({","}))
    if mode is not None:
        for f in fs:
            mode.check(f)
    return fs


def parse_sequent(text: str, mode: LogicMode | None = None) -> Sequent:
    p = _Parser(text)
    left = p.formula_list(frozenset({"turnstile"}))
    if p.tok.kind != "turnstile":
        raise p.error(frozenset({",", "|-"}))
    p.i += 1
    right = p.formula_list(frozenset({"end"}))
    p.expect_end(frozenset({","}))
    if mode is not None:
        for f in left + right:
            mode.check(f)
    return Sequent(ResourceBag(left), ResourceBag(right))


# precedence levels used by the printer
_LOLLI, _PLUS, _WITH, _TENSOR, _UNARY = 0, 2, 3, 4, 5


def _level(f: Formula) -> int:
    match f:
        case Lollipop():
            return _LOLLI
        case Plus():
            return _PLUS
        case With():
            return _WITH
        case Tensor():
            return _TENSOR
    return _UNARY


def _wrap(f: Formula, parens: bool) -> str:
    s = print_formula(f)
    return f"({s})" if parens else s


def print_formula(f: Formula) -> str:
    """Print with the fewest parentheses that still parse back to ``f``."""
    match f:
        case Atom(name):
            return name
        case One():
            return "1"
        case Top():
            return "top"
        case Neg(body):
            return "~" + _wrap(body, _level(body) < _UNARY)
        case Lollipop(a, b):
            return f"{_wrap(a, _level(a) <= _LOLLI)} -o {print_formula(b)}"
    op = {Plus: "+", With: "&", Tensor: "*"}[type(f)]
    lvl = _level(f)
    return f"{_wrap(f.left, _level(f.left) < lvl)} {op} {_wrap(f.right, _level(f.right) <= lvl)}"


def print_bag(b: ResourceBag) -> str:
    return ", ".join(print_formula(f) for f in b)


def print_sequent(s: Sequent) -> str:
    left, right = print_bag(s.left), print_bag(s.right)
    return f"{left} |- {right}".strip()

"""Reading and writing game files and profile literals.

A game file is line oriented, ``#`` starts a comment::

    logic: affine mall
    player ann  goal: bread    endow: aclock
    player bob  goal: aclock   endow: flour, flour, flour -o bread

Repeat a formula to give it multiplicity. A profile literal looks like
``ann: aclock; bob:``; players left out contribute nothing.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from resgames.logic import ResourceBag, LogicMode
from resgames.model import Game, GameError, Profile
from resgames.syntax import ParseError, parse_formula, parse_formula_list

_PLAYER = re.compile(r"player\s+(?P<id>[A-Za-z0-9_]+)\s+goal:(?P<goal>.*?)\bendow:(?P<endow>.*)$")
_LOGIC = re.compile(r"logic:\s*(?P<mode>.*)$")


def _relocate(err: ParseError, line: int, column_offset: int) -> ParseError:
    return ParseError(err.message, line, err.column + column_offset, err.expected)


def loads_game(text: str, default_mode: LogicMode | None = None) -> Game:
    """Parse game text. A ``logic:`` line wins over ``default_mode``."""
    mode = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        lead = len(line) - len(line.lstrip())
        if m := _LOGIC.match(stripped):
            if mode is not None:
                raise ParseError("duplicate logic line", lineno, lead + 1)
            try:
                mode = LogicMode.parse(m["mode"])
            except ValueError as exc:
                raise ParseError(str(exc), lineno, lead + m.start("mode") + 1) from None
            continue
        m = _PLAYER.match(stripped)
        if m is None:
            raise ParseError("expected 'logic:' or 'player <id> goal: ... endow: ...'", lineno, lead + 1)
        rows.append((lineno, lead, m))
    mode = mode or default_mode or LogicMode()
    if not rows:
        raise ParseError("no players declared", 1, 1)
    players, goals, endowments = [], [], []
    for lineno, lead, m in rows:
        try:
            goal = parse_formula(m["goal"], mode)
        except ParseError as exc:
            raise _relocate(exc, lineno, lead + m.start("goal")) from None
        try:
            endow = parse_formula_list(m["endow"], mode)
        except ParseError as exc:
            raise _relocate(exc, lineno, lead + m.start("endow")) from None
        players.append(m["id"])
        goals.append(goal)
        endowments.append(ResourceBag(endow))
    try:
        return Game(tuple(players), tuple(goals), tuple(endowments), mode)
    except GameError as exc:
        raise ParseError(str(exc), rows[-1][0], 1) from None


def load_game(path: str | Path, default_mode: LogicMode | None = None) -> Game:
    return loads_game(Path(path).read_text(encoding="utf-8"), default_mode)


def dump_game(g: Game) -> str:
    width = max(len(p) for p in g.players)
    lines = [f"logic: {g.mode}"]
    for who, goal, endow in zip(g.players, g.goals, g.endowments):
        items = ", ".join(str(f) for f in endow)
        lines.append(f"player {who:<{width}}  goal: {goal}  endow: {items}".rstrip())
    return "\n".join(lines) + "\n"


def parse_profile(g: Game, literal: str) -> Profile:
    """Read ``"ann: aclock; bob:"`` into a validated profile of ``g``."""
    contributions: dict[str, ResourceBag] = {}
    for part in literal.split(";"):
        if not part.strip():
            continue
        who, sep, items = part.partition(":")
        who = who.strip()
        if not sep or not who:
            raise ParseError(f"expected '<player>: <formulas>' in {part.strip()!r}", 1, 1)
        if who in contributions:
            raise GameError(f"player {who} listed twice")
        g.index(who)
        contributions[who] = ResourceBag(parse_formula_list(items, g.mode))
    return g.profile(contributions)


def fixture_path(name: str) -> Path:
    """Path of a bundled example game, e.g. ``fixture_path("divorce")``."""
    if not name.endswith(".rg"):
        name += ".rg"
    p = resources.files("resgames") / "fixtures" / name
    if not p.is_file():
        raise FileNotFoundError(name)
    return Path(str(p))


def fixture_names() -> list[str]:
    d = resources.files("resgames") / "fixtures"
    return sorted(p.name[:-3] for p in d.iterdir() if p.name.endswith(".rg"))

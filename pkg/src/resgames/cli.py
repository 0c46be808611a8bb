"""Command line front end.

Exit codes: 0 yes, 1 no, 2 usage or parse error, 3 enumeration cap or
prover budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from resgames import __version__
from resgames.coop import CoalitionGame, CoalitionModel, ModelMismatch
from resgames.gamefile import load_game, parse_profile
from resgames.games import (
    all_equilibria,
    is_nash,
    profiles,
    rationally_constructible,
    rationally_eliminable,
    satisfied,
)
from resgames.logic import Fragment, LogicMode, ResGamesError, Weakening
from resgames.model import EnumerationCapExceeded, Game, Limits, PrefKind, Profile
from resgames.prover import BudgetExhausted, Prover, ProverLimits, Status
from resgames.syntax import ParseError, parse_sequent

YES, NO, USAGE, EXHAUSTED = 0, 1, 2, 3


@dataclass
class Report:
    command: str
    verdict: Any = None
    exit_code: int = YES
    inputs: dict = field(default_factory=dict)
    witness: Any = None
    stats: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "stats": self.stats,
            "version": __version__,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.error is not None:
            doc["error"] = self.error
        return doc

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.to_json(), indent=2, sort_keys=True)
        return "\n".join(self.lines)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=["linear", "affine"], help="weakening (a game file's logic line wins)")
    common.add_argument("--fragment", choices=["mll", "mall"], help="connective fragment (a game file's logic line wins)")
    common.add_argument("--json", action="store_true", help="print one JSON document")
    common.add_argument("--prover-budget-ms", type=float, default=None, help="wall-clock budget per provability query (default: none)")

    game = _Parser(add_help=False)
    game.add_argument("game", help="game file")
    game.add_argument("--pref", choices=[k.value for k in PrefKind], default="dichotomous")
    game.add_argument("--limit-pool", type=int, default=Limits.max_pool, help="largest pooled endowment to enumerate (default: %(default)s)")
    game.add_argument("--limit-profiles", type=int, default=Limits.max_profiles, help="largest profile space to enumerate (default: %(default)s)")
    game.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps (default: 1)")

    profile = _Parser(add_help=False)
    profile.add_argument("--profile", required=True, help='e.g. "ann: aclock; bob:"')

    parser = _Parser(prog="resgames", description="Resource games over affine MALL.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prove", parents=[common], help="decide a sequent")
    p.add_argument("sequent", help='e.g. "A, B |- A"')
    p.add_argument("--trace", action="store_true", help="print the proof tree")

    sub.add_parser("nash", parents=[common, game, profile], help="is the profile a Nash equilibrium")
    sub.add_parser("equilibria", parents=[common, game], help="list all Nash equilibria")
    sub.add_parser("eliminate", parents=[common, game, profile], help="is the profile rationally eliminable")
    sub.add_parser("construct", parents=[common, game, profile], help="is the profile rationally constructible")

    c = sub.add_parser("coop", parents=[common, game], help="coalition game queries")
    c.add_argument("--model", choices=[m.value for m in CoalitionModel], default="aigcrg")
    q = c.add_mutually_exclusive_group(required=True)
    q.add_argument("--coalition", help="comma separated player ids, empty for the empty coalition")
    q.add_argument("--table", action="store_true", help="value of every coalition")
    q.add_argument("--veto", action="store_true")
    q.add_argument("--dummy", action="store_true")
    q.add_argument("--core", help='payoff vector, e.g. "0,1,0"')

    sub.add_parser("validate", parents=[common, game], help="load a game file and summarize it")
    return parser


def _flag_mode(args) -> LogicMode | None:
    if args.mode is None and args.fragment is None:
        return None
    return LogicMode(Weakening(args.mode or "affine"), Fragment(args.fragment or "mall"))


def _bag_text(b) -> str:
    return "{" + ", ".join(str(f) for f in b) + "}"


def _profile_json(g: Game, p: Profile) -> dict:
    return {who: [str(f) for f in c] for who, c in zip(g.players, p)}


def _annotated(g: Game, p: Profile, prover: Prover) -> str:
    sat = satisfied(g, p, prover)
    note = ": " + ", ".join(f"goal of {s}" for s in sat) if sat else ""
    return f"({g.format_profile(p)})  outcome {_bag_text(p.outcome())}{note}"


def _cmd_prove(args, prover: Prover, report: Report) -> None:
    mode = _flag_mode(args) or LogicMode()
    s = parse_sequent(args.sequent, mode)
    report.inputs = {"sequent": str(s), "mode": str(mode)}
    result = prover.prove(s, mode, trace=args.trace)
    if result.status is Status.EXHAUSTED:
        raise BudgetExhausted("prover budget exhausted")
    report.verdict = result.provable
    report.exit_code = YES if result.provable else NO
    report.lines.append(f"{s}  [{mode}]: {'provable' if result.provable else 'not provable'}")
    if result.trace is not None:
        report.witness = result.trace.render()
        report.lines.append(report.witness)


def _load(args, report: Report) -> Game:
    g = load_game(args.game, _flag_mode(args))
    report.inputs = {"game": args.game, "mode": str(g.mode)}
    if hasattr(args, "pref"):
        report.inputs["pref"] = args.pref
    return g


def _profile(args, g: Game, report: Report) -> Profile:
    p = parse_profile(g, args.profile)
    report.inputs["profile"] = g.format_profile(p)
    return p


def _limits(args) -> Limits:
    return Limits(max_pool=args.limit_pool, max_profiles=args.limit_profiles)


def _cmd_nash(args, prover, report):
    g = _load(args, report)
    p = _profile(args, g, report)
    ok = is_nash(g, p, PrefKind(args.pref), prover)
    report.verdict = ok
    report.exit_code = YES if ok else NO
    report.lines.append(_annotated(g, p, prover))
    report.lines.append("Nash equilibrium" if ok else "not a Nash equilibrium")


def _cmd_equilibria(args, prover, report):
    g = _load(args, report)
    kind = PrefKind(args.pref)
    ne = all_equilibria(g, kind, prover, _limits(args), jobs=args.jobs)
    marked = set(ne)
    for p in profiles(g, _limits(args)):
        tag = "NE  " if p in marked else "    "
        report.lines.append(tag + _annotated(g, p, prover))
    report.lines.append(f"{len(ne)} equilibria ({kind.value})")
    report.verdict = [_profile_json(g, p) for p in ne]
    report.exit_code = YES if ne else NO


def _cmd_eliminate(args, prover, report):
    g = _load(args, report)
    p = _profile(args, g, report)
    ok = rationally_eliminable(g, p, PrefKind(args.pref), prover, _limits(args))
    report.verdict = ok
    report.exit_code = YES if ok else NO
    report.lines.append(_annotated(g, p, prover))
    report.lines.append("rationally eliminable" if ok else "not rationally eliminable")


def _cmd_construct(args, prover, report):
    g = _load(args, report)
    p = _profile(args, g, report)
    ok, w = rationally_constructible(g, p, PrefKind(args.pref), prover, _limits(args))
    report.verdict = ok
    report.exit_code = YES if ok else NO
    report.lines.append(_annotated(g, p, prover))
    report.lines.append("rationally constructible" if ok else "not rationally constructible")
    if w is not None:
        report.witness = {
            "redistribution": _profile_json(g, w.redistribution),
            "profile": _profile_json(g, w.profile),
        }
        report.lines.append(f"  redistribution: {g.format_profile(w.redistribution)}")
        report.lines.append(f"  equilibrium:    {g.format_profile(w.profile)}")


def _coalition_text(c) -> str:
    return "{" + ", ".join(c) + "}"


def _cmd_coop(args, prover, report):
    g = _load(args, report)
    cg = CoalitionGame(g, CoalitionModel(args.model), prover, _limits(args))
    report.inputs["model"] = args.model
    if args.coalition is not None:
        members = [m.strip() for m in args.coalition.split(",") if m.strip()]
        c = cg.coalition(members)
        v = cg.value(c)
        report.inputs["coalition"] = list(c)
        report.verdict = v
        report.exit_code = YES if v > 0 else NO
        report.lines.append(f"v({_coalition_text(c)}) = {v}")
    elif args.table:
        rows = cg.table()
        report.verdict = [{"coalition": list(c), "value": v} for c, v in rows]
        report.lines.extend(f"{_coalition_text(c):<20} {v}" for c, v in rows)
    elif args.veto:
        vs = cg.veto_players()
        report.verdict = list(vs)
        report.lines.append(f"veto players: {_coalition_text(vs)}")
    elif args.dummy:
        ds = cg.dummy_players()
        report.verdict = list(ds)
        report.lines.append(f"dummy players: {_coalition_text(ds)}")
    else:
        try:
            payoff = [float(x) for x in args.core.split(",")]
        except ValueError:
            raise _UsageError(f"bad payoff vector {args.core!r}") from None
        ok = cg.in_core(payoff)
        report.inputs["payoff"] = payoff
        report.verdict = ok
        report.exit_code = YES if ok else NO
        report.lines.append("in the core" if ok else "not in the core")


def _cmd_validate(args, prover, report):
    g = _load(args, report)
    pool = g.pool()
    report.verdict = True
    report.witness = {
        "players": list(g.players),
        "pool_size": len(pool),
        "profile_count": g.profile_count(),
    }
    report.lines.append(f"logic: {g.mode}")
    for who, goal, e in zip(g.players, g.goals, g.endowments):
        report.lines.append(f"player {who}: goal {goal}, endowment {_bag_text(e)}")
    report.lines.append(f"pool: {_bag_text(pool)} ({len(pool)} resources)")
    report.lines.append(f"profiles: {g.profile_count()}")


_COMMANDS = {
    "prove": _cmd_prove,
    "nash": _cmd_nash,
    "equilibria": _cmd_equilibria,
    "eliminate": _cmd_eliminate,
    "construct": _cmd_construct,
    "coop": _cmd_coop,
    "validate": _cmd_validate,
}


def run(argv: Sequence[str]) -> tuple[Report, bool]:
    """Execute one command; returns the report and whether JSON was asked for."""
    argv = list(argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return Report(argv[0] if argv else "", exit_code=USAGE, error=str(exc), lines=[f"error: {exc}"]), as_json
    except SystemExit as exc:
        # --help and --version print and exit on their own
        return Report("help", exit_code=int(exc.code or 0)), False
    report = Report(args.command)
    prover = Prover(ProverLimits(budget_ms=args.prover_budget_ms))
    start = time.perf_counter()
    try:
        _COMMANDS[args.command](args, prover, report)
    except (EnumerationCapExceeded, BudgetExhausted) as exc:
        report.exit_code, report.error, report.verdict = EXHAUSTED, str(exc), None
        report.lines.append(f"exhausted: {exc}")
    except (ParseError, ResGamesError, ModelMismatch, OSError, _UsageError) as exc:
        report.exit_code, report.error, report.verdict = USAGE, str(exc), None
        report.lines.append(f"error: {exc}")
    report.stats = prover.stats.snapshot()
    report.stats["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return report, as_json


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report, as_json = run(argv)
    if report.lines or as_json:
        stream = sys.stderr if report.exit_code == USAGE and not as_json else sys.stdout
        print(report.render(as_json), file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

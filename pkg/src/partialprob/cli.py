"""Command-line interface.

Exit codes: 0 for success (coherent / verified / no Dutch Book found),
1 when a violation or Dutch Book exists, 2 for input errors.  World
strings are written most-significant-variable first: "TNF" assigns T to
p1, N to p2, F to p3.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .betting import Book, ClassicalBook, Verdict, book_from_json, classify, detect
from .formulas import ParseError, parse
from .pairs import RPair
from .probability import (
    BeliefAssignment,
    check_belief_axioms,
    check_derived_properties,
)
from .semantics import (
    ARITY_CAP,
    ArityCapError,
    ArityMismatchError,
    dnf_formula_for,
    entails,
    equivalent,
    evaluate,
    meaning,
    world_from_str,
    world_to_str,
    worlds,
)
from .partial_sets import UniverseMismatchError
from .synthesis import synthesize_all
from .verification import SUITE_NAMES, run_suites


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load_json_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _pair_str(p: RPair) -> str:
    return f"({p.u:g}, {p.v:g})"


def cmd_eval(args) -> int:
    world = world_from_str(args.world)
    arity = args.arity if args.arity is not None else len(world)
    formula = parse(args.formula, arity)
    value = evaluate(formula, world)
    payload = {
        "formula": str(formula),
        "world": args.world,
        "value": value.char,
        "pair": [value.pair.x, value.pair.y],
    }
    _emit(args, payload, [f"{formula} at {args.world}: {value.char}, pair {value.pair}"])
    return 0


def cmd_table(args) -> int:
    formula = parse(args.formula, args.arity)
    rows = []
    lines = [f"world  {formula}"]
    for world in worlds(args.arity):
        value = evaluate(formula, world)
        rows.append({"world": world_to_str(world), "value": value.char})
        lines.append(f"{world_to_str(world):<6} {value.char}")
    _emit(args, {"formula": str(formula), "table": rows}, lines)
    return 0


def cmd_meaning(args) -> int:
    formula = parse(args.formula, args.arity)
    m = meaning(formula)
    pos = sorted(world_to_str(w) for w in m.pos)
    neg = sorted(world_to_str(w) for w in m.neg)
    payload = {"formula": str(formula), "pos": pos, "neg": neg}
    lines = [
        f"meaning of {formula} over {3 ** args.arity} worlds",
        f"  positive ({len(pos)}): {' '.join(pos) or '-'}",
        f"  negative ({len(neg)}): {' '.join(neg) or '-'}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_entails(args) -> int:
    *premise_texts, conclusion_text = args.formulas
    premises = [parse(t, args.arity) for t in premise_texts]
    conclusion = parse(conclusion_text, args.arity)
    holds = entails(premises, conclusion)
    payload = {
        "premises": [str(p) for p in premises],
        "conclusion": str(conclusion),
        "entails": holds,
    }
    shown = ", ".join(str(p) for p in premises) or "(empty)"
    _emit(args, payload, [f"{shown} entails {conclusion}: {str(holds).lower()}"])
    return 0


def cmd_equiv(args) -> int:
    a = parse(args.left, args.arity)
    b = parse(args.right, args.arity)
    same = equivalent(a, b)
    payload = {"left": str(a), "right": str(b), "equivalent": same}
    _emit(args, payload, [f"{a} equivalent to {b}: {str(same).lower()}"])
    return 0


def cmd_check(args) -> int:
    beliefs = BeliefAssignment.from_json(_load_json_file(args.file))
    report = check_belief_axioms(beliefs)
    derived = check_derived_properties(beliefs)
    violations = report.violations + derived
    payload = {
        "violations": [v.to_json() for v in violations],
        "unchecked": [u.to_json() for u in report.unchecked],
    }
    lines = [f"{len(beliefs)} beliefs at arity {beliefs.arity}"]
    for v in violations:
        lines.append(f"violation [{v.kind}] {v.message}")
    for u in report.unchecked:
        lines.append(f"unchecked [{u.kind}] {', '.join(str(s) for s in u.subjects)}: {u.reason}")
    lines.append("coherent" if not violations else f"{len(violations)} violation(s)")
    _emit(args, payload, lines)
    return 0 if not violations else 1


def cmd_synth(args) -> int:
    beliefs = BeliefAssignment.from_json(_load_json_file(args.file))
    outcome = synthesize_all(beliefs)
    payload = outcome.to_json()
    lines = []
    for cert in outcome.certificates:
        lines.append(f"[{cert.violation.kind}] {cert.violation.message}")
        lines.append(f"  verdict: {cert.result.verdict.value}")
        for bet in cert.book.bets:
            lines.append(f"  bet: {bet.formula}  quotient {bet.quotient}  stake {bet.stake}")
        if cert.note:
            lines.append(f"  note: {cert.note}")
    for v in outcome.unsynthesized:
        lines.append(f"[{v.kind}] {v.message}")
        lines.append("  detected but not synthesized (incomparable sides)")
    found = len(outcome.certificates) + len(outcome.unsynthesized)
    lines.append(
        "coherent: no certificates"
        if not found
        else f"{len(outcome.certificates)} certificate(s), {len(outcome.unsynthesized)} unsynthesized"
    )
    _emit(args, payload, lines)
    return 0 if not found else 1


def cmd_detect(args) -> int:
    book = book_from_json(_load_json_file(args.file))
    result = detect(book)
    payload = result.to_json()
    lines = [f"verdict: {result.verdict.value}"]
    if result.witness is not None:
        lines.append(f"witness world: {world_to_str(result.witness)}")
    if result.empty:
        lines.append("note: empty book")
    _emit(args, payload, lines)
    return 0 if result.verdict is Verdict.NEITHER else 1


def cmd_payoff(args) -> int:
    book = book_from_json(_load_json_file(args.file))
    world = world_from_str(args.world)
    if len(world) != book.arity:
        raise ValueError(f"world {args.world!r} has length {len(world)}, book arity is {book.arity}")
    per_bet = [bet.payoff(world) for bet in book.bets]
    total = book.payoff(world)
    if isinstance(book, ClassicalBook):
        payload = {
            "world": args.world,
            "bets": [float(p) for p in per_bet],
            "total": float(total),
        }
        lines = [f"bet on {bet.formula}: {p:g}" for bet, p in zip(book.bets, per_bet)]
        lines.append(f"total: {total:g}")
    else:
        region = classify(total)
        payload = {
            "world": args.world,
            "bets": [[p.u, p.v] for p in per_bet],
            "total": [total.u, total.v],
            "region": region.value,
        }
        lines = [f"bet on {bet.formula}: {_pair_str(p)}" for bet, p in zip(book.bets, per_bet)]
        lines.append(f"total: {_pair_str(total)}  [{region.value}]")
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    if args.arity > ARITY_CAP:
        raise ArityCapError(f"arity {args.arity} exceeds the enumeration cap of {ARITY_CAP}")
    names = [args.suite] if args.suite else None
    results = run_suites(names, arity=args.arity, seed=args.seed, iterations=args.iterations)
    payload = {"suites": [r.to_json() for r in results]}
    lines = []
    for r in results:
        status = "pass" if r.ok else "FAIL"
        lines.append(f"{r.name}: {status} ({r.checks} checks, {len(r.failures)} failures)")
        for note in r.notes:
            lines.append(f"  {note}")
        for failure in r.failures[:5]:
            lines.append(f"  failure: {failure}")
    _emit(args, payload, lines)
    return 0 if all(r.ok for r in results) else 1


def cmd_dnf(args) -> int:
    chosen = [world_from_str(t) for t in args.worlds]
    formula = dnf_formula_for(chosen, args.arity)
    _emit(args, {"formula": str(formula)}, [str(formula)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialprob",
        description="Three-valued subjective probability toolkit: evaluate "
        "formulas, check belief coherence, and construct Dutch Books.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit a JSON payload")
        return p

    p = add("eval", cmd_eval, "evaluate a formula at one world")
    p.add_argument("formula")
    p.add_argument("world", help="world string over T/N/F, p1 first")
    p.add_argument("--arity", type=int, default=None)

    p = add("table", cmd_table, "full truth table of a formula")
    p.add_argument("formula")
    p.add_argument("--arity", type=int, required=True)

    p = add("meaning", cmd_meaning, "positive and negative model worlds")
    p.add_argument("formula")
    p.add_argument("--arity", type=int, required=True)

    p = add("entails", cmd_entails, "consequence check (last formula is the conclusion)")
    p.add_argument("formulas", nargs="+")
    p.add_argument("--arity", type=int, required=True)

    p = add("equiv", cmd_equiv, "equivalence check")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--arity", type=int, required=True)

    p = add("check", cmd_check, "check a belief file for axiom violations")
    p.add_argument("file")

    p = add("synth", cmd_synth, "synthesize Dutch Book certificates for a belief file")
    p.add_argument("file")

    p = add("detect", cmd_detect, "classify a book file (Dutch Book / weak / neither)")
    p.add_argument("file")

    p = add("payoff", cmd_payoff, "payoffs of a book file at one world")
    p.add_argument("file")
    p.add_argument("world")

    p = add("verify", cmd_verify, "run the built-in verification suites")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=100)
    p.add_argument("--suite", choices=SUITE_NAMES, default=None)

    p = add("dnf", cmd_dnf, "formula with exactly the given classical model worlds")
    p.add_argument("worlds", nargs="*", help="classical world strings over T/F")
    p.add_argument("--arity", type=int, required=True)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ParseError,
        ArityCapError,
        ArityMismatchError,
        UniverseMismatchError,
        ValueError,
        KeyError,
        TypeError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Bets, payoffs, and exhaustive Dutch Book detection.

A classical bet (formula, quotient x, stake r) pays r(1 - x) when the
formula is true and -rx when it is false.  A partial bet carries a
quotient in the value triangle and a stake in R^2; its payoff in world w
is stake * (value_pair(w) - quotient), pointwise:

    true     (h(1-x), -ky)
    neutral  (-hx,    -ky)
    false    (-hx,  k(1-y))

R^2 payoffs are classified against the diagonal: below it (u > v) is net
good, above it (u < v) is net bad.  A book is a Dutch Book when its
payoff is bad at every world, and a Weak Dutch Book when no world is good
and at least one is bad.  Detection enumerates all 3^n worlds (2^n
neutral-free worlds for classical books, with strict/weak comparisons
against zero) and is deterministic: witnesses are the lexicographically
first qualifying worlds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .formulas import Formula, TruthValue, is_classical, parse
from .pairs import EPSILON, PartialValue, RPair
from .semantics import (
    World,
    classical_worlds,
    evaluate,
    is_classical_world,
    worlds,
)


class Region(Enum):
    """Position of an R^2 payoff relative to the diagonal."""

    DELTA_MINUS = "delta-"
    DELTA = "delta"
    DELTA_PLUS = "delta+"


class Verdict(Enum):
    DUTCH_BOOK = "DutchBook"
    WEAK_DUTCH_BOOK = "WeakDutchBook"
    NEITHER = "Neither"


def classify(payoff) -> Region:
    """Trichotomy with an epsilon band around the diagonal."""
    if isinstance(payoff, PartialValue):
        payoff = payoff.rpair()
    diff = payoff.u - payoff.v
    if abs(diff) <= EPSILON:
        return Region.DELTA
    return Region.DELTA_PLUS if diff > 0 else Region.DELTA_MINUS


@dataclass(frozen=True)
class PartialBet:
    formula: Formula
    quotient: PartialValue
    stake: RPair

    def payoff(self, world: World) -> RPair:
        value = evaluate(self.formula, world)
        return self.stake * (value.pair - self.quotient)


@dataclass(frozen=True)
class ClassicalBet:
    formula: Formula
    quotient: float
    stake: float

    def __post_init__(self) -> None:
        if not is_classical(self.formula):
            raise ValueError(f"{self.formula} is not a classical formula")
        if self.quotient < -EPSILON or self.quotient > 1 + EPSILON:
            raise ValueError(f"quotient {self.quotient} outside [0, 1]")

    def payoff(self, world: World) -> float:
        if not is_classical_world(world):
            raise ValueError("classical bets pay off only at classical worlds")
        value = evaluate(self.formula, world)
        if value is TruthValue.TRUE:
            return self.stake * (1.0 - self.quotient)
        return -self.stake * self.quotient


@dataclass(frozen=True)
class Book:
    """Finite list of partial bets over one language."""

    arity: int
    bets: tuple[PartialBet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bets", tuple(self.bets))
        for bet in self.bets:
            if bet.formula.arity != self.arity:
                raise ValueError(f"bet on {bet.formula} has arity {bet.formula.arity}, expected {self.arity}")

    def payoff(self, world: World) -> RPair:
        total = RPair(0.0, 0.0)
        for bet in self.bets:
            total = total + bet.payoff(world)
        return total


@dataclass(frozen=True)
class ClassicalBook:
    arity: int
    bets: tuple[ClassicalBet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bets", tuple(self.bets))
        for bet in self.bets:
            if bet.formula.arity != self.arity:
                raise ValueError(f"bet on {bet.formula} has arity {bet.formula.arity}, expected {self.arity}")

    def payoff(self, world: World) -> float:
        return sum(bet.payoff(world) for bet in self.bets)


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of a detection scan.

    The witness is the lexicographically first strict-loss world for a
    Weak Dutch Book, the first world outside the required region for
    Neither, and None for a (strict) Dutch Book, where every world loses.
    """

    verdict: Verdict
    witness: World | None = None
    empty: bool = False

    def to_json(self) -> dict:
        from .semantics import world_to_str

        return {
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else world_to_str(self.witness),
            "empty": self.empty,
        }


def detect(book: Book | ClassicalBook) -> DetectionResult:
    """Classify a book by scanning every world."""
    if isinstance(book, ClassicalBook):
        return _detect_classical(book)
    if not book.bets:
        return DetectionResult(Verdict.NEITHER, None, empty=True)

    all_bad = True
    none_good = True
    first_bad: World | None = None
    first_good: World | None = None
    first_not_bad: World | None = None
    for world in worlds(book.arity):
        region = classify(book.payoff(world))
        if region is Region.DELTA_MINUS:
            if first_bad is None:
                first_bad = world
        else:
            all_bad = False
            if first_not_bad is None:
                first_not_bad = world
            if region is Region.DELTA_PLUS:
                none_good = False
                if first_good is None:
                    first_good = world
    if all_bad:
        return DetectionResult(Verdict.DUTCH_BOOK)
    if none_good and first_bad is not None:
        return DetectionResult(Verdict.WEAK_DUTCH_BOOK, first_bad)
    witness = first_good if first_good is not None else first_not_bad
    return DetectionResult(Verdict.NEITHER, witness)


def _detect_classical(book: ClassicalBook) -> DetectionResult:
    if not book.bets:
        return DetectionResult(Verdict.NEITHER, None, empty=True)

    all_loss = True
    none_gain = True
    first_loss: World | None = None
    first_gain: World | None = None
    first_not_loss: World | None = None
    for world in classical_worlds(book.arity):
        payoff = book.payoff(world)
        if payoff < -EPSILON:
            if first_loss is None:
                first_loss = world
        else:
            all_loss = False
            if first_not_loss is None:
                first_not_loss = world
            if payoff > EPSILON:
                none_gain = False
                if first_gain is None:
                    first_gain = world
    if all_loss:
        return DetectionResult(Verdict.DUTCH_BOOK)
    if none_gain and first_loss is not None:
        return DetectionResult(Verdict.WEAK_DUTCH_BOOK, first_loss)
    witness = first_gain if first_gain is not None else first_not_loss
    return DetectionResult(Verdict.NEITHER, witness)


def book_to_json(book: Book | ClassicalBook) -> dict:
    if isinstance(book, ClassicalBook):
        return {
            "arity": book.arity,
            "kind": "classical",
            "bets": [
                {"formula": str(b.formula), "quotient": b.quotient, "stake": b.stake}
                for b in book.bets
            ],
        }
    return {
        "arity": book.arity,
        "kind": "partial",
        "bets": [
            {
                "formula": str(b.formula),
                "quotient": [b.quotient.x, b.quotient.y],
                "stake": [b.stake.u, b.stake.v],
            }
            for b in book.bets
        ],
    }


def book_from_json(obj: Mapping) -> Book | ClassicalBook:
    try:
        arity = int(obj["arity"])
        kind = obj.get("kind", "partial")
        rows = obj["bets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed book file: {exc}") from exc
    if kind == "classical":
        bets = []
        for row in rows:
            bets.append(
                ClassicalBet(
                    parse(str(row["formula"]), arity),
                    float(row["quotient"]),
                    float(row["stake"]),
                )
            )
        return ClassicalBook(arity, tuple(bets))
    if kind != "partial":
        raise ValueError(f"unknown book kind {kind!r}")
    bets = []
    for row in rows:
        quotient = row["quotient"]
        stake = row["stake"]
        if not isinstance(quotient, (list, tuple)) or len(quotient) != 2:
            raise ValueError(f"partial quotient must be a pair, got {quotient!r}")
        if not isinstance(stake, (list, tuple)) or len(stake) != 2:
            raise ValueError(f"partial stake must be a pair, got {stake!r}")
        bets.append(
            PartialBet(
                parse(str(row["formula"]), arity),
                PartialValue(float(quotient[0]), float(quotient[1])),
                RPair(float(stake[0]), float(stake[1])),
            )
        )
    return Book(arity, tuple(bets))

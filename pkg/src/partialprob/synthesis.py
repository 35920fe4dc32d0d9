"""Constructive Dutch Book synthesis.

Given a belief assignment that violates one of the coherence axioms (or
assigns different values to equivalent formulas), these functions build
the exact exploiting book, re-verify it with the detection scan, and
package the result as a machine-checkable certificate.

The constructions, with quotients always taken from the assignment:

  axiom 1   value (x, y) != (1, 0) on a formula entailed by 1:
            one bet with stake (-1, -1); constant payoff (x-1, y).
  axiom 2   additive identity broken with comparable sides: four bets
            with stakes (+-1, +-1); the world-dependent parts cancel and
            the constant payoff is the smaller side minus the larger.
  axiom 3   b(!f) != swap(b(f)): two bets.  When the coordinate sums
            differ, both stakes (-1, -1) or (1, 1) give a constant-loss
            book; when the sums agree, the stake solver yields a book
            that breaks even at undecided worlds and loses at decided
            ones (a weak book).
  axiom 4   y > 0 on a formula entailed by n: one bet with stake
            (0, -1); constant payoff (0, y).
  equivalence  equal formulas, different values: two bets with unit
            stakes chosen by the sign pattern of the differences.

The classical constructions (scalar quotients and stakes) cover validity,
unsatisfiability, the additive identity, and classical equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .betting import (
    Book,
    ClassicalBet,
    ClassicalBook,
    DetectionResult,
    PartialBet,
    Verdict,
    book_to_json,
    detect,
)
from .formulas import And, Formula, Not, Or, one, neutral
from .pairs import (
    EPSILON,
    PartialValue,
    RPair,
    approx_eq,
    pair_approx,
    pair_leq,
    pv_leq,
    sigma,
)
from .probability import BeliefAssignment, ClassicalBeliefAssignment, Violation, _value_json
from .semantics import (
    classical_worlds,
    classically_equivalent,
    classically_valid,
    entails,
    equivalent,
    world_to_str,
    worlds,
)


class SynthesisError(ValueError):
    """Preconditions for a construction do not hold (no violation, or
    required entries are missing)."""


class IncomparableSidesError(SynthesisError):
    """Axiom-2 sides differ but are incomparable in the pair order; no
    construction is attempted for such violations."""


class SolverPreconditionError(ValueError):
    """Stake-solver input outside its domain; reason is one of
    "not-in-T", "equal-to-sigma", "sum-mismatch"."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class StakeQuadruple:
    """Stakes (h, k) and (hp, kp) with h*x + hp*z = k*y + kp*w, h < kp
    and hp < k."""

    h: float
    hp: float
    k: float
    kp: float

    def __post_init__(self) -> None:
        if not (self.h < self.kp and self.hp < self.k):
            raise ValueError(
                f"stake quadruple must satisfy h < kp and hp < k, got {self}"
            )


def stake_solver(x: float, y: float, z: float, w: float) -> StakeQuadruple:
    """Solve h*x + hp*z = k*y + kp*w with h < kp and hp < k, for values
    (x, y), (z, w) in the triangle with (y, x) != (z, w) and x+z = y+w.

    Deterministic choices: with y, w > 0 take unit/zero h, hp oriented by
    the sign of x - w, t at half the t-intercept; on the y = 0 boundary
    take (h, hp) = (0, 1), t = 1; on the w = 0 boundary take
    (h, hp) = (1, 0), q = 1.
    """
    for a, b_ in ((x, y), (z, w)):
        if a < -EPSILON or a > 1 + EPSILON or b_ < -EPSILON or b_ > 1 + EPSILON or a + b_ > 1 + EPSILON:
            raise SolverPreconditionError("not-in-T", f"({a}, {b_}) is not a partial value")
    if abs(y - z) <= EPSILON and abs(x - w) <= EPSILON:
        raise SolverPreconditionError(
            "equal-to-sigma", f"({z}, {w}) equals the swap of ({x}, {y})"
        )
    if not approx_eq(x + z, y + w):
        raise SolverPreconditionError(
            "sum-mismatch", f"x + z = {x + z} differs from y + w = {y + w}"
        )

    if y <= 0.0:
        # Here w > 0 and z > 0: w = 0 would force every value to 0 and
        # z = 0 would force x = w, both excluded by the gates above.
        if w <= EPSILON or z <= EPSILON:
            raise SolverPreconditionError("sum-mismatch", "degenerate boundary input")
        h, hp = 0.0, 1.0
        q = (hp - h) * z / w
        t = 1.0
    elif w <= 0.0:
        # Mirror case: x > 0 and y > 0.
        if y <= EPSILON or x <= EPSILON:
            raise SolverPreconditionError("sum-mismatch", "degenerate boundary input")
        h, hp = 1.0, 0.0
        t = (h - hp) * x / y
        q = 1.0
    else:
        if x > w:
            h, hp = 1.0, 0.0
        else:
            h, hp = 0.0, 1.0
        t = (h - hp) * (x - w) / (2.0 * y)
        q = -(y / w) * t + (h - hp) * (x - w) / w
    return StakeQuadruple(h, hp, t + hp, q + h)


@dataclass
class Certificate:
    """A violation, the exploiting book, the verified verdict, and the
    per-world payoff table (full for arity <= 4, else the first 81
    worlds, flagged as sampled)."""

    violation: Violation
    book: Book | ClassicalBook
    result: DetectionResult
    payoffs: tuple = field(default_factory=tuple)
    payoffs_sampled: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "violation": self.violation.to_json(),
            "book": book_to_json(self.book),
            "verdict": self.result.verdict.value,
            "witness": None
            if self.result.witness is None
            else world_to_str(self.result.witness),
            "payoffs": {ws: _value_json(p) for ws, p in self.payoffs},
            "payoffs_sampled": self.payoffs_sampled,
            "note": self.note,
        }


_TABLE_LIMIT = 81  # 3^4; larger arities get a sampled table


def _payoff_table(book: Book | ClassicalBook) -> tuple[tuple, bool]:
    enum = classical_worlds(book.arity) if isinstance(book, ClassicalBook) else worlds(book.arity)
    rows = []
    sampled = False
    for i, world in enumerate(enum):
        if i >= _TABLE_LIMIT:
            sampled = True
            break
        rows.append((world_to_str(world), book.payoff(world)))
    return tuple(rows), sampled


def _certify(violation: Violation, book: Book | ClassicalBook, note: str = "") -> Certificate:
    result = detect(book)
    if result.verdict is Verdict.NEITHER:
        raise SynthesisError(
            "synthesized book is not conclusive at the working tolerance"
        )
    payoffs, sampled = _payoff_table(book)
    return Certificate(violation, book, result, payoffs, sampled, note)


def synth_axiom1(alpha: Formula, b: BeliefAssignment) -> Certificate:
    """Book for a formula entailed by 1 whose value is not (1, 0)."""
    if alpha not in b:
        raise SynthesisError(f"{alpha} is not in the assignment")
    if not entails([one(b.arity)], alpha):
        raise SynthesisError(f"1 does not entail {alpha}")
    v = b[alpha]
    if pair_approx(v, PartialValue(1.0, 0.0)):
        raise SynthesisError(f"no violation: b({alpha}) = {v}")
    violation = Violation(
        "axiom-1", (alpha,), (v,), f"1 entails {alpha} but b({alpha}) = {v} != (1, 0)"
    )
    book = Book(b.arity, (PartialBet(alpha, v, RPair(-1.0, -1.0)),))
    return _certify(violation, book)


def synth_axiom2(alpha: Formula, beta: Formula, b: BeliefAssignment) -> Certificate:
    """Four-bet book for a broken additive identity with comparable sides."""
    or_f, and_f = Or(alpha, beta), And(alpha, beta)
    for f in (alpha, beta, or_f, and_f):
        if f not in b:
            raise SynthesisError(f"{f} is not in the assignment")
    lhs = b[alpha] + b[beta]
    rhs = b[or_f] + b[and_f]
    if pair_approx(lhs, rhs):
        raise SynthesisError(f"no violation: both sides equal {lhs}")
    violation = Violation(
        "axiom-2",
        (alpha, beta, or_f, and_f),
        (b[alpha], b[beta], b[or_f], b[and_f]),
        f"b({alpha})+b({beta}) = {lhs} but b({or_f})+b({and_f}) = {rhs}",
    )
    if pair_leq(lhs, rhs):
        compound_stake, single_stake = RPair(1.0, 1.0), RPair(-1.0, -1.0)
    elif pair_leq(rhs, lhs):
        compound_stake, single_stake = RPair(-1.0, -1.0), RPair(1.0, 1.0)
    else:
        raise IncomparableSidesError(
            f"sides {lhs} and {rhs} are incomparable; no construction known"
        )
    book = Book(
        b.arity,
        (
            PartialBet(or_f, b[or_f], compound_stake),
            PartialBet(and_f, b[and_f], compound_stake),
            PartialBet(alpha, b[alpha], single_stake),
            PartialBet(beta, b[beta], single_stake),
        ),
    )
    return _certify(violation, book)


def synth_axiom3(alpha: Formula, b: BeliefAssignment) -> Certificate:
    """Two-bet book on a formula and its negation whose values are not
    swaps of each other."""
    neg = Not(alpha)
    for f in (alpha, neg):
        if f not in b:
            raise SynthesisError(f"{f} is not in the assignment")
    x, y = b[alpha].as_tuple()
    z, w = b[neg].as_tuple()
    if pair_approx(b[neg], sigma(b[alpha])):
        raise SynthesisError(f"no violation: b({neg}) = sigma(b({alpha}))")
    violation = Violation(
        "axiom-3",
        (alpha, neg),
        (b[alpha], b[neg]),
        f"b({neg}) = {b[neg]}, expected sigma(b({alpha})) = {sigma(b[alpha])}",
    )
    s_pos, s_neg = x + z, y + w
    note = ""
    if s_pos < s_neg - EPSILON:
        stakes = (RPair(-1.0, -1.0), RPair(-1.0, -1.0))
    elif s_neg < s_pos - EPSILON:
        stakes = (RPair(1.0, 1.0), RPair(1.0, 1.0))
    else:
        quad = stake_solver(x, y, z, w)
        stakes = (RPair(quad.h, quad.k), RPair(quad.hp, quad.kp))
        note = (
            "weak book: the payoff sits on the diagonal at worlds where the "
            "formula is neutral and strictly above it elsewhere"
        )
    book = Book(
        b.arity,
        (PartialBet(alpha, b[alpha], stakes[0]), PartialBet(neg, b[neg], stakes[1])),
    )
    return _certify(violation, book, note)


def synth_axiom4(alpha: Formula, b: BeliefAssignment) -> Certificate:
    """One-bet book with stake (0, -1) for a formula entailed by n whose
    value has positive negative part."""
    if alpha not in b:
        raise SynthesisError(f"{alpha} is not in the assignment")
    if not entails([neutral(b.arity)], alpha):
        raise SynthesisError(f"n does not entail {alpha}")
    v = b[alpha]
    if pv_leq(PartialValue(0.0, 0.0), v):
        raise SynthesisError(f"no violation: (0, 0) <= b({alpha}) = {v}")
    violation = Violation(
        "axiom-4", (alpha,), (v,), f"n entails {alpha} but (0, 0) is not <= b({alpha}) = {v}"
    )
    book = Book(b.arity, (PartialBet(alpha, v, RPair(0.0, -1.0)),))
    return _certify(violation, book)


def synth_equivalence(alpha: Formula, beta: Formula, b: BeliefAssignment) -> Certificate:
    """Two-bet book for equivalent formulas carrying different values."""
    for f in (alpha, beta):
        if f not in b:
            raise SynthesisError(f"{f} is not in the assignment")
    if not equivalent(alpha, beta):
        raise SynthesisError(f"{alpha} and {beta} are not equivalent")
    if pair_approx(b[alpha], b[beta]):
        raise SynthesisError(f"no violation: both values equal {b[alpha]}")
    x, y = b[alpha].as_tuple()
    z, w = b[beta].as_tuple()
    d_pos, d_neg = z - x, w - y
    violation = Violation(
        "equivalence",
        (alpha, beta),
        (b[alpha], b[beta]),
        f"{alpha} and {beta} are equivalent but b values {b[alpha]} != {b[beta]}",
    )
    if d_pos < d_neg - EPSILON:
        stake_a, stake_b = RPair(1.0, 1.0), RPair(-1.0, -1.0)
    elif d_neg < d_pos - EPSILON:
        stake_a, stake_b = RPair(-1.0, -1.0), RPair(1.0, 1.0)
    elif d_pos < 0:
        stake_a, stake_b = RPair(1.0, -1.0), RPair(-1.0, 1.0)
    else:
        stake_a, stake_b = RPair(-1.0, 1.0), RPair(1.0, -1.0)
    book = Book(
        b.arity,
        (PartialBet(alpha, b[alpha], stake_a), PartialBet(beta, b[beta], stake_b)),
    )
    return _certify(violation, book)


CLASSICAL_AXIOM1 = "classical-axiom-1"
CLASSICAL_ZERO = "classical-zero"
CLASSICAL_ADDITIVITY = "classical-additivity"
CLASSICAL_EQUIVALENCE = "classical-equivalence"


def synth_classical(
    kind: str, formulas: Sequence[Formula], b: ClassicalBeliefAssignment
) -> Certificate:
    """Classical constructions, dispatched by violation kind:

    classical-axiom-1      valid formula with belief < 1: stake -1.
    classical-zero         unsatisfiable formula with belief > 0: stake 1.
    classical-additivity   b(a|c) + b(a&c) != b(a) + b(c): four unit bets.
    classical-equivalence  equivalent formulas, different beliefs.

    Every payoff is the same strictly negative constant at all 2^n
    neutral-free worlds.
    """
    if kind == CLASSICAL_AXIOM1:
        (alpha,) = formulas
        if alpha not in b:
            raise SynthesisError(f"{alpha} is not in the assignment")
        if not classically_valid(alpha):
            raise SynthesisError(f"{alpha} is not classically valid")
        v = b[alpha]
        if approx_eq(v, 1.0):
            raise SynthesisError(f"no violation: b({alpha}) = {v}")
        violation = Violation(kind, (alpha,), (v,), f"{alpha} is valid but b({alpha}) = {v} < 1")
        book = ClassicalBook(b.arity, (ClassicalBet(alpha, v, -1.0),))
        return _certify(violation, book)

    if kind == CLASSICAL_ZERO:
        (alpha,) = formulas
        if alpha not in b:
            raise SynthesisError(f"{alpha} is not in the assignment")
        if not classically_valid(Not(alpha)):
            raise SynthesisError(f"!({alpha}) is not classically valid")
        v = b[alpha]
        if approx_eq(v, 0.0):
            raise SynthesisError(f"no violation: b({alpha}) = {v}")
        violation = Violation(kind, (alpha,), (v,), f"{alpha} is unsatisfiable but b({alpha}) = {v} > 0")
        book = ClassicalBook(b.arity, (ClassicalBet(alpha, v, 1.0),))
        return _certify(violation, book)

    if kind == CLASSICAL_ADDITIVITY:
        alpha, beta = formulas
        or_f, and_f = Or(alpha, beta), And(alpha, beta)
        for f in (alpha, beta, or_f, and_f):
            if f not in b:
                raise SynthesisError(f"{f} is not in the assignment")
        x, y = b[alpha], b[beta]
        z, w = b[or_f], b[and_f]
        if approx_eq(z + w, x + y):
            raise SynthesisError("no violation: the additive identity holds")
        violation = Violation(
            kind,
            (alpha, beta, or_f, and_f),
            (x, y, z, w),
            f"b({or_f})+b({and_f}) = {z + w} but b({alpha})+b({beta}) = {x + y}",
        )
        sign = 1.0 if z + w > x + y else -1.0
        book = ClassicalBook(
            b.arity,
            (
                ClassicalBet(or_f, z, sign),
                ClassicalBet(and_f, w, sign),
                ClassicalBet(alpha, x, -sign),
                ClassicalBet(beta, y, -sign),
            ),
        )
        return _certify(violation, book)

    if kind == CLASSICAL_EQUIVALENCE:
        alpha, beta = formulas
        for f in (alpha, beta):
            if f not in b:
                raise SynthesisError(f"{f} is not in the assignment")
        if not classically_equivalent(alpha, beta):
            raise SynthesisError(f"{alpha} and {beta} are not classically equivalent")
        x, z = b[alpha], b[beta]
        if approx_eq(x, z):
            raise SynthesisError(f"no violation: both beliefs equal {x}")
        violation = Violation(
            kind, (alpha, beta), (x, z), f"{alpha} = {beta} classically but beliefs {x} != {z}"
        )
        sign = 1.0 if z < x else -1.0
        book = ClassicalBook(
            b.arity, (ClassicalBet(alpha, x, sign), ClassicalBet(beta, z, -sign))
        )
        return _certify(violation, book)

    raise SynthesisError(f"unknown classical violation kind {kind!r}")


@dataclass
class SynthesisOutcome:
    """Certificates for every synthesizable violation, plus the detected
    violations no construction covers (incomparable axiom-2 sides)."""

    certificates: list[Certificate] = field(default_factory=list)
    unsynthesized: list[Violation] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "certificates": [c.to_json() for c in self.certificates],
            "unsynthesized": [v.to_json() for v in self.unsynthesized],
        }


def synthesize_all(b: BeliefAssignment) -> SynthesisOutcome:
    """Check the axioms, synthesize a certificate for every violation,
    then scan all entry pairs for equivalence violations.  Output order
    is deterministic: axiom order first, entry order within an axiom,
    equivalence findings last."""
    from .probability import check_belief_axioms

    outcome = SynthesisOutcome()
    report = check_belief_axioms(b)
    for violation in report.violations:
        try:
            if violation.kind == "axiom-1":
                cert = synth_axiom1(violation.subjects[0], b)
            elif violation.kind == "axiom-2":
                cert = synth_axiom2(violation.subjects[0], violation.subjects[1], b)
            elif violation.kind == "axiom-3":
                cert = synth_axiom3(violation.subjects[0], b)
            elif violation.kind == "axiom-4":
                cert = synth_axiom4(violation.subjects[0], b)
            else:  # pragma: no cover - the checker emits only the kinds above
                continue
        except IncomparableSidesError:
            outcome.unsynthesized.append(violation)
            continue
        outcome.certificates.append(cert)

    formulas = b.formulas
    for i, f in enumerate(formulas):
        for g in formulas[i + 1 :]:
            if pair_approx(b[f], b[g]):
                continue
            if equivalent(f, g):
                outcome.certificates.append(synth_equivalence(f, g, b))
    return outcome

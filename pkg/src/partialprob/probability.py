"""Partial probability: lifted classical measures, belief assignments,
and the axiom checkers.

A classical probability p on a sample space S lifts to partial events by
mu(A, B) = (p(A), p(B)); disjointness of A and B keeps the result inside
the value triangle.  Additivity is checked in the form

    mu(a) + mu(b) = mu(a join b) + mu(a meet b)

which is the coordinatewise inclusion-exclusion identity of the lifted
construction (|A| + |C| = |A u C| + |A n C| on each side); a subtractive
right-hand side is inconsistent with it and with the additivity axiom on
belief assignments, so the additive form is the one enforced here.

Belief assignments map formulas to values in the triangle.  The checker
reports every violated axiom instance it can decide, and reports axiom-2
instances it cannot decide (a pair whose conjunction or disjunction entry
is missing) as unchecked rather than silently passing them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .formulas import And, Formula, Not, Or, TruthValue, neutral, one, parse, zero, is_classical
from .pairs import EPSILON, PartialValue, RPair, approx_eq, pair_approx, pv_leq, sigma
from .partial_sets import PartialSet, Universe, UniverseMismatchError
from .semantics import entails, kleene_universe, meaning


@dataclass(frozen=True)
class ClassicalMeasure:
    """Probability weights over the atoms of a finite universe."""

    universe: Universe
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.universe):
            raise ValueError("one weight per atom required")
        if any(w < -EPSILON for w in self.weights):
            raise ValueError("negative weight")
        total = sum(self.weights)
        if not approx_eq(total, 1.0):
            raise ValueError(f"weights sum to {total}, not 1")

    @classmethod
    def uniform(cls, universe: Universe) -> "ClassicalMeasure":
        n = len(universe)
        if n == 0:
            raise ValueError("empty universe")
        return cls(universe, (1.0 / n,) * n)

    @classmethod
    def from_map(cls, universe: Universe, mapping: Mapping) -> "ClassicalMeasure":
        return cls(universe, tuple(mapping.get(a, 0.0) for a in universe.atoms))

    def prob_bits(self, mask: int) -> float:
        total = 0.0
        while mask:
            low = mask & -mask
            total += self.weights[low.bit_length() - 1]
            mask ^= low
        return total


def measure_from_classical(p: ClassicalMeasure) -> Callable[[PartialSet], PartialValue]:
    """The lifted measure mu(A, B) = (p(A), p(B)) on partial sets."""

    def mu(event: PartialSet) -> PartialValue:
        if event.universe != p.universe:
            raise UniverseMismatchError("event universe differs from the measure's")
        return PartialValue(p.prob_bits(event.pos_bits), p.prob_bits(event.neg_bits))

    return mu


def _value_json(value) -> object:
    if isinstance(value, PartialValue):
        return [value.x, value.y]
    if isinstance(value, RPair):
        return [value.u, value.v]
    return value


@dataclass(frozen=True)
class Violation:
    """One violated axiom instance: which axiom, on which subjects, with
    the observed values.  Carries enough to drive book synthesis."""

    kind: str
    subjects: tuple
    observed: tuple
    message: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "subjects": [str(s) for s in self.subjects],
            "observed": [_value_json(v) for v in self.observed],
            "message": self.message,
        }


@dataclass(frozen=True)
class Unchecked:
    """An axiom instance that could not be decided from the given entries."""

    kind: str
    subjects: tuple
    reason: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "subjects": [str(s) for s in self.subjects],
            "reason": self.reason,
        }


@dataclass
class CoherenceReport:
    violations: list[Violation] = field(default_factory=list)
    unchecked: list[Unchecked] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "violations": [v.to_json() for v in self.violations],
            "unchecked": [u.to_json() for u in self.unchecked],
        }


def check_measure_axioms(
    mu: Callable[[PartialSet], PartialValue], field_sets: Iterable[PartialSet]
) -> list[Violation]:
    """Check the four measure axioms over every element and pair of a
    field of partial sets.  The field must contain the constants and be
    closed under meet/join/negate; closure failures are themselves
    returned as violations (kind "closure") and preempt the axiom scan.
    """
    elements = list(dict.fromkeys(field_sets))
    if not elements:
        return [Violation("closure", (), (), "empty field: constants are missing")]
    universe = elements[0].universe
    index = {(e.pos_bits, e.neg_bits) for e in elements}

    def member(ps: PartialSet) -> bool:
        return (ps.pos_bits, ps.neg_bits) in index

    closure: list[Violation] = []
    for constant in (PartialSet.top(universe), PartialSet.bottom(universe), PartialSet.neutral(universe)):
        if not member(constant):
            closure.append(Violation("closure", (constant,), (), f"constant {constant!r} missing from field"))
    for a in elements:
        if not member(a.negate()):
            closure.append(Violation("closure", (a,), (), "field not closed under negate"))
    for a in elements:
        for b in elements:
            if not member(a.meet(b)):
                closure.append(Violation("closure", (a, b), (), "field not closed under meet"))
            if not member(a.join(b)):
                closure.append(Violation("closure", (a, b), (), "field not closed under join"))
    if closure:
        return closure

    violations: list[Violation] = []
    top = PartialSet.top(universe)
    v_top = mu(top)
    if not pair_approx(v_top, PartialValue(1.0, 0.0)):
        violations.append(
            Violation("measure-1", (top,), (v_top,), f"mu(top) = {v_top}, expected (1, 0)")
        )
    values = {(e.pos_bits, e.neg_bits): mu(e) for e in elements}

    def lookup(ps: PartialSet) -> PartialValue:
        return values[(ps.pos_bits, ps.neg_bits)]

    for a in elements:
        for b in elements:
            lhs = lookup(a) + lookup(b)
            rhs = lookup(a.join(b)) + lookup(a.meet(b))
            if not pair_approx(lhs, rhs):
                violations.append(
                    Violation(
                        "measure-2",
                        (a, b),
                        (lhs, rhs),
                        f"mu(a)+mu(b) = {lhs} but mu(a|b)+mu(a&b) = {rhs}",
                    )
                )
    for a in elements:
        got = lookup(a.negate())
        want = sigma(lookup(a))
        if not pair_approx(got, want):
            violations.append(
                Violation("measure-3", (a,), (got, want), f"mu(-a) = {got}, expected sigma(mu(a)) = {want}")
            )
    for a in elements:
        if a.neg_bits == 0:  # neutral <= a
            v = lookup(a)
            if not pv_leq(PartialValue(0.0, 0.0), v):
                violations.append(
                    Violation("measure-4", (a,), (v,), f"neutral <= a but (0, 0) is not <= mu(a) = {v}")
                )
    return violations


def _coerce_value(value) -> PartialValue:
    if isinstance(value, PartialValue):
        return value
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return PartialValue(float(value[0]), float(value[1]))
    raise TypeError(f"cannot interpret {value!r} as a partial value")


class BeliefAssignment:
    """Ordered, duplicate-free map from formulas to partial values."""

    def __init__(
        self,
        entries: Iterable[tuple[Formula, PartialValue]] | Mapping[Formula, PartialValue],
        arity: int | None = None,
    ):
        if isinstance(entries, Mapping):
            entries = entries.items()
        table: dict[Formula, PartialValue] = {}
        for formula, value in entries:
            if formula in table:
                raise ValueError(f"duplicate formula {formula}")
            if arity is None:
                arity = formula.arity
            elif formula.arity != arity:
                raise ValueError(
                    f"formula {formula} has arity {formula.arity}, expected {arity}"
                )
            table[formula] = _coerce_value(value)
        if arity is None:
            raise ValueError("empty assignment needs an explicit arity")
        self._table = table
        self.arity = arity

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(self._table)

    def __contains__(self, formula: Formula) -> bool:
        return formula in self._table

    def __getitem__(self, formula: Formula) -> PartialValue:
        return self._table[formula]

    def get(self, formula: Formula, default=None):
        return self._table.get(formula, default)

    def items(self) -> Iterable[tuple[Formula, PartialValue]]:
        return self._table.items()

    def __len__(self) -> int:
        return len(self._table)

    def __repr__(self) -> str:
        return f"BeliefAssignment(arity={self.arity}, {len(self)} entries)"

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "beliefs": [
                {"formula": str(f), "value": [v.x, v.y]} for f, v in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "BeliefAssignment":
        try:
            arity = int(obj["arity"])
            rows = obj["beliefs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed belief file: {exc}") from exc
        entries = []
        for row in rows:
            formula = parse(str(row["formula"]), arity)
            raw = row["value"]
            if not isinstance(raw, (list, tuple)) or len(raw) != 2:
                raise ValueError(f"belief value must be a pair, got {raw!r}")
            # Values may be given as numbers or as decimal strings.
            entries.append((formula, PartialValue(float(raw[0]), float(raw[1]))))
        return cls(entries, arity=arity)


class ClassicalBeliefAssignment:
    """Map from classical formulas to numbers in [0, 1]."""

    def __init__(self, entries: Iterable[tuple[Formula, float]] | Mapping[Formula, float], arity: int | None = None):
        if isinstance(entries, Mapping):
            entries = entries.items()
        table: dict[Formula, float] = {}
        for formula, value in entries:
            if not is_classical(formula):
                raise ValueError(f"{formula} is not a classical formula")
            if formula in table:
                raise ValueError(f"duplicate formula {formula}")
            if arity is None:
                arity = formula.arity
            elif formula.arity != arity:
                raise ValueError(f"formula {formula} has arity {formula.arity}, expected {arity}")
            value = float(value)
            if value < -EPSILON or value > 1 + EPSILON:
                raise ValueError(f"belief {value} outside [0, 1]")
            table[formula] = value
        if arity is None:
            raise ValueError("empty assignment needs an explicit arity")
        self._table = table
        self.arity = arity

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(self._table)

    def __contains__(self, formula: Formula) -> bool:
        return formula in self._table

    def __getitem__(self, formula: Formula) -> float:
        return self._table[formula]

    def items(self) -> Iterable[tuple[Formula, float]]:
        return self._table.items()

    def __len__(self) -> int:
        return len(self._table)


def induced_belief_assignment(
    formulas: Iterable[Formula], measure: ClassicalMeasure | None = None
) -> BeliefAssignment:
    """Belief assignment b(f) = mu(meaning(f)) for a classical measure on
    the world universe (uniform by default).  Coherent by construction."""
    ordered = list(dict.fromkeys(formulas))
    if not ordered:
        raise ValueError("need at least one formula")
    universe = kleene_universe(ordered[0].arity)
    if measure is None:
        measure = ClassicalMeasure.uniform(universe)
    elif measure.universe != universe:
        raise UniverseMismatchError("measure is not over the world universe")
    mu = measure_from_classical(measure)
    return BeliefAssignment([(f, mu(meaning(f))) for f in ordered])


def check_belief_axioms(b: BeliefAssignment) -> CoherenceReport:
    """Check every decidable axiom instance of a belief assignment.

    Axiom instances are discovered structurally: axiom 2 looks for entries
    that are literally And(a, b) / Or(a, b) of two other entries, with no
    normalization.  Pairs where only one of the two compounds is present
    are reported as unchecked.
    """
    n = b.arity
    report = CoherenceReport()
    top_value = PartialValue(1.0, 0.0)
    one_f = one(n)
    neutral_f = neutral(n)

    for f, v in b.items():
        if entails([one_f], f) and not pair_approx(v, top_value):
            report.violations.append(
                Violation("axiom-1", (f,), (v,), f"1 entails {f} but b({f}) = {v} != (1, 0)")
            )

    formulas = b.formulas
    for f in formulas:
        for g in formulas:
            and_f, or_f = And(f, g), Or(f, g)
            has_and, has_or = and_f in b, or_f in b
            if not (has_and or has_or):
                continue
            if has_and and has_or:
                lhs = b[f] + b[g]
                rhs = b[or_f] + b[and_f]
                if not pair_approx(lhs, rhs):
                    report.violations.append(
                        Violation(
                            "axiom-2",
                            (f, g, or_f, and_f),
                            (b[f], b[g], b[or_f], b[and_f]),
                            f"b({f})+b({g}) = {lhs} but b({or_f})+b({and_f}) = {rhs}",
                        )
                    )
            else:
                missing = "conjunction" if not has_and else "disjunction"
                report.unchecked.append(
                    Unchecked("axiom-2", (f, g), f"{missing} entry missing")
                )

    for f in formulas:
        neg_f = Not(f)
        if neg_f in b:
            want = sigma(b[f])
            if not pair_approx(b[neg_f], want):
                report.violations.append(
                    Violation(
                        "axiom-3",
                        (f, neg_f),
                        (b[f], b[neg_f]),
                        f"b({neg_f}) = {b[neg_f]}, expected sigma(b({f})) = {want}",
                    )
                )

    for f, v in b.items():
        if entails([neutral_f], f) and not pv_leq(PartialValue(0.0, 0.0), v):
            report.violations.append(
                Violation("axiom-4", (f,), (v,), f"n entails {f} but (0, 0) is not <= b({f}) = {v}")
            )

    return report


def check_derived_properties(b: BeliefAssignment) -> list[Violation]:
    """Consequences of the axioms, checked on present entries: the value
    of the neutral constant, the values forced by entailing 0 or n, and
    the additive split b(f) = b(f|n) + b(f&n).  Meaningful for
    assignments that already pass the axiom check."""
    n = b.arity
    neutral_f = neutral(n)
    zero_f = zero(n)
    out: list[Violation] = []

    for f, v in b.items():
        if f == neutral_f and not pair_approx(v, PartialValue(0.0, 0.0)):
            out.append(Violation("derived-1", (f,), (v,), f"b(n) = {v}, expected (0, 0)"))
        if entails([f], zero_f) and not pair_approx(v, PartialValue(0.0, 1.0)):
            out.append(
                Violation("derived-2", (f,), (v,), f"{f} entails 0 but b({f}) = {v} != (0, 1)")
            )
        if entails([f], neutral_f) and not pv_leq(v, PartialValue(0.0, 0.0)):
            out.append(
                Violation("derived-3", (f,), (v,), f"{f} entails n but b({f}) = {v} is not <= (0, 0)")
            )
        or_n, and_n = Or(f, neutral_f), And(f, neutral_f)
        if or_n in b and and_n in b:
            combined = b[or_n] + b[and_n]
            if not pair_approx(v, combined):
                out.append(
                    Violation(
                        "derived-4",
                        (f, or_n, and_n),
                        (v, b[or_n], b[and_n]),
                        f"b({f}) = {v} but b({or_n})+b({and_n}) = {combined}",
                    )
                )
    return out

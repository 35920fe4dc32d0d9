"""Built-in verification suites and seeded random generators.

Each suite re-derives one of the package's structural guarantees by
direct enumeration or randomized search: the valuation sum rule, value
monotonicity and model persistence along the information order, the
agreement of the two meaning computations, the measure axioms on the
partial events of a fair die, the stake-solver contract, and the
exclusion of nontrivial two-sided events from the subalgebra generated
by the variable meanings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .formulas import And, Const, Formula, Not, Or, TruthValue, Var
from .pairs import EPSILON, PartialValue
from .partial_sets import PartialSet, Universe, generated_subalgebra
from .probability import ClassicalMeasure, check_measure_axioms, measure_from_classical
from .semantics import (
    evaluate,
    info_leq,
    kleene_universe,
    meaning,
    meaning_by_scan,
    value_info_leq,
    world_to_str,
    worlds,
)
from .synthesis import stake_solver

SUITE_NAMES = (
    "sum-rule",
    "monotonicity",
    "vm-correspondence",
    "die-measure",
    "stake-solver",
    "corollary",
)

#: The corollary suite closes a generated subalgebra; beyond this arity
#: the closure is no longer desk-scale.
COROLLARY_ARITY_LIMIT = 2


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "failures": self.failures,
            "notes": self.notes,
            "ok": self.ok,
        }


def random_formula(
    rng: random.Random, arity: int, max_depth: int = 3, allow_neutral: bool = True
) -> Formula:
    """Random formula over p1..p<arity>, constants included."""
    if max_depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.75:
            return Var(rng.randint(1, arity), arity)
        choices = [TruthValue.FALSE, TruthValue.TRUE]
        if allow_neutral:
            choices.append(TruthValue.NEUTRAL)
        return Const(rng.choice(choices), arity)
    roll = rng.random()
    if roll < 0.25:
        return Not(random_formula(rng, arity, max_depth - 1, allow_neutral))
    left = random_formula(rng, arity, max_depth - 1, allow_neutral)
    right = random_formula(rng, arity, max_depth - 1, allow_neutral)
    return And(left, right) if roll < 0.625 else Or(left, right)


def random_partial_value(rng: random.Random, max_x: float = 1.0) -> PartialValue:
    x = rng.uniform(0.0, max_x)
    return PartialValue(x, rng.uniform(0.0, 1.0 - x))


def random_admissible_quadruple(
    rng: random.Random, boundary: str | None = None, separation: float = 1e-6
) -> tuple[float, float, float, float]:
    """Sample (x, y), (z, w) in the triangle with x + z = y + w and
    (y, x) != (z, w), separated by at least `separation`.  With
    boundary="y" the first negative part is pinned to 0, with
    boundary="w" the second."""
    while True:
        if boundary == "y":
            x = rng.uniform(0.0, 1.0)
            y = 0.0
            z = rng.uniform(0.0, (1.0 - x) / 2.0)
            w = x + z
        elif boundary == "w":
            y = rng.uniform(0.0, 1.0)
            x = rng.uniform(0.0, 1.0 - y)
            z = y - x
            w = 0.0
            if z < 0.0:
                continue
        else:
            x = rng.uniform(0.0, 1.0)
            y = rng.uniform(0.0, 1.0 - x)
            lo = max(0.0, y - x)
            hi = min(1.0, (1.0 + y - x) / 2.0)
            if hi <= lo:
                continue
            z = rng.uniform(lo, hi)
            w = x + z - y
        if w < 0.0 or w > 1.0 or z + w > 1.0:
            continue
        if max(abs(y - z), abs(x - w)) <= separation:
            continue
        return x, y, z, w


def _info_pairs(arity: int) -> list[tuple[int, int]]:
    universe = kleene_universe(arity)
    atoms = universe.atoms
    return [
        (i, j)
        for i, s in enumerate(atoms)
        for j, t in enumerate(atoms)
        if info_leq(s, t)
    ]


def _suite_sum_rule(arity: int, rng: random.Random, iterations: int) -> SuiteResult:
    result = SuiteResult("sum-rule")
    world_list = list(worlds(arity))
    for _ in range(iterations):
        a = random_formula(rng, arity)
        b = random_formula(rng, arity)
        both_or = Or(a, b)
        both_and = And(a, b)
        for w in world_list:
            lhs = evaluate(both_or, w).pair + evaluate(both_and, w).pair
            rhs = evaluate(a, w).pair + evaluate(b, w).pair
            result.checks += 1
            if lhs != rhs:
                result.failures.append(
                    f"sum rule fails for {a} / {b} at {world_to_str(w)}"
                )
    return result


def _suite_monotonicity(arity: int, rng: random.Random, iterations: int) -> SuiteResult:
    result = SuiteResult("monotonicity")
    universe = kleene_universe(arity)
    pairs = _info_pairs(arity)
    for _ in range(iterations):
        f = random_formula(rng, arity)
        m = meaning(f)
        for i, j in pairs:
            s, t = universe.atoms[i], universe.atoms[j]
            result.checks += 1
            if not value_info_leq(evaluate(f, s), evaluate(f, t)):
                result.failures.append(
                    f"value of {f} drops from {world_to_str(s)} to {world_to_str(t)}"
                )
                continue
            if m.pos_bits >> i & 1 and not m.pos_bits >> j & 1:
                result.failures.append(f"positive model of {f} lost at {world_to_str(t)}")
            if m.neg_bits >> i & 1 and not m.neg_bits >> j & 1:
                result.failures.append(f"negative model of {f} lost at {world_to_str(t)}")
    return result


def _suite_vm_correspondence(arity: int, rng: random.Random, iterations: int) -> SuiteResult:
    result = SuiteResult("vm-correspondence")
    universe = kleene_universe(arity)
    for _ in range(iterations):
        f = random_formula(rng, arity)
        recursive = meaning(f)
        scanned = meaning_by_scan(f)
        result.checks += 1
        if recursive != scanned:
            result.failures.append(f"recursive and scanned meanings differ for {f}")
            continue
        for i, w in enumerate(universe.atoms):
            v = evaluate(f, w)
            in_pos = bool(recursive.pos_bits >> i & 1)
            in_neg = bool(recursive.neg_bits >> i & 1)
            result.checks += 1
            if in_pos != (v is TruthValue.TRUE) or in_neg != (v is TruthValue.FALSE):
                result.failures.append(
                    f"meaning of {f} disagrees with its value at {world_to_str(w)}"
                )
    return result


def _suite_die_measure() -> SuiteResult:
    result = SuiteResult("die-measure")
    universe = Universe(range(1, 7))
    mu = measure_from_classical(ClassicalMeasure.uniform(universe))
    # All 3^6 partial sets on the die sample space.
    elements = []
    full = universe.full_mask
    for pos in range(full + 1):
        free = full & ~pos
        neg = free
        while True:
            elements.append(PartialSet(universe, pos, neg))
            if neg == 0:
                break
            neg = (neg - 1) & free
    violations = check_measure_axioms(mu, elements)
    result.checks = len(elements) * (len(elements) + 2) + 1
    result.failures = [v.message for v in violations]
    result.notes.append(f"{len(elements)} partial events checked")
    return result


def _suite_stake_solver(rng: random.Random, iterations: int) -> SuiteResult:
    result = SuiteResult("stake-solver")
    for i in range(iterations):
        boundary = None
        if i % 10 == 8:
            boundary = "y"
        elif i % 10 == 9:
            boundary = "w"
        x, y, z, w = random_admissible_quadruple(rng, boundary)
        quad = stake_solver(x, y, z, w)
        result.checks += 1
        lhs = quad.h * x + quad.hp * z
        rhs = quad.k * y + quad.kp * w
        if abs(lhs - rhs) > EPSILON:
            result.failures.append(f"solver identity off by {lhs - rhs} on {(x, y, z, w)}")
        if not (quad.h < quad.kp and quad.hp < quad.k):
            result.failures.append(f"solver inequalities fail on {(x, y, z, w)}")
    return result


def _suite_corollary(arity: int) -> SuiteResult:
    result = SuiteResult("corollary")
    if arity > COROLLARY_ARITY_LIMIT:
        result.notes.append(
            f"closure runs at arity {COROLLARY_ARITY_LIMIT} (requested {arity})"
        )
        arity = COROLLARY_ARITY_LIMIT
    universe = kleene_universe(arity)
    generators = [meaning(Var(i, arity)) for i in range(1, arity + 1)]
    closure = generated_subalgebra(generators, universe)
    top = PartialSet.top(universe)
    bottom = PartialSet.bottom(universe)
    witness = None
    full = universe.full_mask
    for pos in range(full + 1):
        candidate = PartialSet(universe, pos, full & ~pos)
        if candidate == top or candidate == bottom:
            continue
        result.checks += 1
        if candidate in closure:
            result.failures.append(
                f"two-sided event {candidate!r} is reachable from the variable meanings"
            )
        elif witness is None:
            witness = candidate
    result.notes.append(f"closure size {len(closure)} of {3 ** len(universe)} partial sets")
    if witness is not None:
        pos_worlds = ",".join(world_to_str(w) for w in sorted(witness.pos))
        result.notes.append(
            f"witness: the two-sided event with positive worlds {{{pos_worlds}}} is unreachable"
        )
    return result


def run_suites(
    names: Sequence[str] | None = None,
    arity: int = 2,
    seed: int = 0,
    iterations: int = 100,
) -> list[SuiteResult]:
    """Run the named suites (all by default) with one seeded generator."""
    chosen = list(names) if names else list(SUITE_NAMES)
    for name in chosen:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r} (expected one of {', '.join(SUITE_NAMES)})")
    results = []
    for name in chosen:
        rng = random.Random(seed)
        if name == "sum-rule":
            results.append(_suite_sum_rule(arity, rng, iterations))
        elif name == "monotonicity":
            results.append(_suite_monotonicity(arity, rng, iterations))
        elif name == "vm-correspondence":
            results.append(_suite_vm_correspondence(arity, rng, iterations))
        elif name == "die-measure":
            results.append(_suite_die_measure())
        elif name == "stake-solver":
            results.append(_suite_stake_solver(rng, iterations))
        elif name == "corollary":
            results.append(_suite_corollary(arity))
    return results

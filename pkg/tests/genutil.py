"""Shared randomized generators for the test suite.

Violation samplers keep a comfortable margin (1e-6) away from the
equality boundary so that the synthesized books' strictness never rides
on the working tolerance.
"""

from __future__ import annotations

import random

from partialprob import (
    And,
    BeliefAssignment,
    Formula,
    Not,
    Or,
    PartialValue,
    TruthValue,
    evaluate,
    neutral,
    one,
    worlds,
    zero,
)
from partialprob.verification import random_formula, random_partial_value

MARGIN = 1e-6


def random_valid_formula(rng: random.Random, arity: int) -> Formula:
    """A formula true at every world (entailed by 1)."""
    base = one(arity) if rng.random() < 0.3 else Not(zero(arity))
    for _ in range(rng.randint(0, 2)):
        other = random_formula(rng, arity, max_depth=2)
        if rng.random() < 0.5:
            base = Or(base, other)
        elif rng.random() < 0.5:
            base = Or(other, base)
        else:
            base = And(base, one(arity)) if rng.random() < 0.5 else And(base, base)
    return base


def random_neutral_entailed(rng: random.Random, arity: int) -> Formula:
    """A formula whose value is N or T at every world (entailed by n)."""
    roll = rng.random()
    if roll < 0.3:
        base = neutral(arity)
    elif roll < 0.5:
        base = one(arity)
    else:
        g = random_formula(rng, arity, max_depth=2)
        base = Or(g, Not(g))
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            base = Or(base, random_formula(rng, arity, max_depth=2))
        else:
            g = random_formula(rng, arity, max_depth=1)
            base = And(base, Or(g, Not(g)))
    return base


def has_neutral_world(f: Formula) -> bool:
    return any(evaluate(f, w) is TruthValue.NEUTRAL for w in worlds(f.arity))


def random_axiom1_violation(rng: random.Random, arity: int) -> tuple[Formula, BeliefAssignment]:
    alpha = random_valid_formula(rng, arity)
    x = rng.uniform(0.0, 1.0 - MARGIN)
    value = PartialValue(x, rng.uniform(0.0, 1.0 - x))
    return alpha, BeliefAssignment([(alpha, value)])


def random_axiom2_violation(
    rng: random.Random, arity: int
) -> tuple[Formula, Formula, BeliefAssignment]:
    """Values whose sides differ and are comparable in the pair order
    (the coordinate differences have opposite signs)."""
    while True:
        alpha = random_formula(rng, arity, max_depth=2)
        beta = random_formula(rng, arity, max_depth=2)
        if alpha != beta:
            break
    while True:
        va = random_partial_value(rng)
        vb = random_partial_value(rng)
        vo = random_partial_value(rng)
        vn = random_partial_value(rng)
        du = (vo.x + vn.x) - (va.x + vb.x)
        dv = (vo.y + vn.y) - (va.y + vb.y)
        if du >= MARGIN and dv <= -MARGIN:
            break
        if du <= -MARGIN and dv >= MARGIN:
            break
    return alpha, beta, BeliefAssignment(
        [(alpha, va), (beta, vb), (Or(alpha, beta), vo), (And(alpha, beta), vn)]
    )


def random_axiom3_violation(
    rng: random.Random, arity: int, case: int | None = None
) -> tuple[Formula, BeliefAssignment, int]:
    """Returns (alpha, assignment, case) with case 1: x+z < y+w,
    case 2: y+w < x+z, case 3: equal sums."""
    if case is None:
        case = rng.choice((1, 2, 3))
    while True:
        alpha = random_formula(rng, arity, max_depth=2)
        # An everywhere-neutral formula gives the equal-sums book no
        # strict-loss world; skip those for case 3.
        if case != 3 or any(
            evaluate(alpha, w) is not TruthValue.NEUTRAL for w in worlds(arity)
        ):
            break
    while True:
        va = random_partial_value(rng)
        x, y = va.x, va.y
        if case == 3:
            lo, hi = max(0.0, y - x), min(1.0, (1.0 + y - x) / 2.0)
            if hi <= lo:
                continue
            z = rng.uniform(lo, hi)
            w = x + z - y
            if not (0.0 <= w <= 1.0 and z + w <= 1.0):
                continue
            if max(abs(y - z), abs(x - w)) <= MARGIN:
                continue
        else:
            vb = random_partial_value(rng)
            z, w = vb.x, vb.y
            if case == 1 and not x + z < y + w - MARGIN:
                continue
            if case == 2 and not y + w < x + z - MARGIN:
                continue
            if abs(y - z) <= MARGIN and abs(x - w) <= MARGIN:
                continue
        b = BeliefAssignment([(alpha, PartialValue(x, y)), (Not(alpha), PartialValue(z, w))])
        return alpha, b, case


def random_axiom4_violation(rng: random.Random, arity: int) -> tuple[Formula, BeliefAssignment]:
    alpha = random_neutral_entailed(rng, arity)
    y = rng.uniform(MARGIN, 1.0)
    value = PartialValue(rng.uniform(0.0, 1.0 - y), y)
    return alpha, BeliefAssignment([(alpha, value)])


def random_equivalence_violation(
    rng: random.Random, arity: int
) -> tuple[Formula, Formula, BeliefAssignment]:
    alpha = random_formula(rng, arity, max_depth=2)
    beta = alpha
    for _ in range(rng.randint(1, 2)):
        roll = rng.random()
        if roll < 0.4:
            beta = And(beta, beta)
        elif roll < 0.8:
            beta = Or(beta, beta)
        else:
            beta = Not(Not(beta))
    while True:
        va = random_partial_value(rng)
        vb = random_partial_value(rng)
        if max(abs(va.x - vb.x), abs(va.y - vb.y)) > MARGIN:
            break
    return alpha, beta, BeliefAssignment([(alpha, va), (beta, vb)])


def random_formula_family(rng: random.Random, arity: int, size: int = 4) -> list[Formula]:
    """Base formulas plus compounds, so axiom-2/3 instances are exercised."""
    base = [random_formula(rng, arity, max_depth=2) for _ in range(size)]
    family = list(base)
    for _ in range(size):
        f, g = rng.choice(base), rng.choice(base)
        family.extend([f, g, And(f, g), Or(f, g)])
    family.extend(Not(f) for f in base[:2])
    family.append(neutral(arity))
    f = rng.choice(base)
    family.extend([Or(f, neutral(arity)), And(f, neutral(arity))])
    return list(dict.fromkeys(family))

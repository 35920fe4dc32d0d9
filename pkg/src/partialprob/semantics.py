"""Possible-world semantics for the three-valued language.

A world is a tuple of truth values, one per variable.  Valuation extends
a world homomorphically (min for &, max for |, negation swapping F/T and
fixing N).  The meaning of a formula is the partial set of its positive
and negative model worlds over the universe of all 3^n worlds; it is
computed both recursively through the partial-set algebra and by scanning
worlds, and the two must agree.

World enumeration is capped at arity 12 (3^12 = 531,441 worlds) so every
semantic question stays exact and exhaustive.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Iterator, Sequence

from .formulas import And, Const, Formula, Not, Or, TruthValue, Var, is_classical, zero
from .partial_sets import PartialSet, Universe

#: Hard limit for operations that enumerate all worlds.
ARITY_CAP = 12

World = tuple[TruthValue, ...]

_TRUTH_ORDER = (TruthValue.FALSE, TruthValue.NEUTRAL, TruthValue.TRUE)
_CLASSICAL_ORDER = (TruthValue.FALSE, TruthValue.TRUE)


class ArityCapError(ValueError):
    """Raised when an exhaustive operation exceeds the arity cap."""


class ArityMismatchError(ValueError):
    """Raised when formulas and worlds disagree on arity."""


def _check_cap(arity: int) -> None:
    if not isinstance(arity, int) or arity < 1:
        raise ValueError(f"arity must be a positive integer, got {arity!r}")
    if arity > ARITY_CAP:
        raise ArityCapError(
            f"arity {arity} exceeds the enumeration cap of {ARITY_CAP}"
        )


def worlds(arity: int) -> Iterator[World]:
    """All 3^arity worlds, lexicographically with F < N < T, p1 first."""
    _check_cap(arity)
    return product(_TRUTH_ORDER, repeat=arity)


def classical_worlds(arity: int) -> Iterator[World]:
    """The 2^arity neutral-free worlds, lexicographically with F < T."""
    _check_cap(arity)
    return product(_CLASSICAL_ORDER, repeat=arity)


def is_classical_world(world: World) -> bool:
    return TruthValue.NEUTRAL not in world


def world_to_str(world: World) -> str:
    return "".join(v.char for v in world)


def world_from_str(text: str) -> World:
    return tuple(TruthValue.from_char(c) for c in text)


@lru_cache(maxsize=None)
def kleene_universe(arity: int) -> Universe:
    """The universe of all worlds at a given arity (cached, shared)."""
    return Universe(worlds(arity))


def evaluate(formula: Formula, world: Sequence[TruthValue]) -> TruthValue:
    """Truth value of the formula in the given world."""
    if len(world) != formula.arity:
        raise ArityMismatchError(
            f"world of length {len(world)} for a formula of arity {formula.arity}"
        )
    return _eval(formula, world)


def _eval(f: Formula, w: Sequence[TruthValue]) -> TruthValue:
    if isinstance(f, Var):
        return w[f.index - 1]
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return _eval(f.operand, w).negated
    if isinstance(f, And):
        return min(_eval(f.left, w), _eval(f.right, w))
    if isinstance(f, Or):
        return max(_eval(f.left, w), _eval(f.right, w))
    raise TypeError(f"not a formula: {f!r}")


@lru_cache(maxsize=None)
def _variable_meaning(arity: int, index: int) -> PartialSet:
    universe = kleene_universe(arity)
    pos = 0
    neg = 0
    for i, world in enumerate(universe.atoms):
        v = world[index - 1]
        if v is TruthValue.TRUE:
            pos |= 1 << i
        elif v is TruthValue.FALSE:
            neg |= 1 << i
    return PartialSet(universe, pos, neg)


def meaning(formula: Formula) -> PartialSet:
    """Partial set of positive/negative model worlds, computed by the
    homomorphic recursion through the partial-set algebra."""
    universe = kleene_universe(formula.arity)
    return _meaning(formula, universe)


def _meaning(f: Formula, universe: Universe) -> PartialSet:
    if isinstance(f, Var):
        return _variable_meaning(f.arity, f.index)
    if isinstance(f, Const):
        if f.value is TruthValue.TRUE:
            return PartialSet.top(universe)
        if f.value is TruthValue.FALSE:
            return PartialSet.bottom(universe)
        return PartialSet.neutral(universe)
    if isinstance(f, Not):
        return _meaning(f.operand, universe).negate()
    if isinstance(f, And):
        return _meaning(f.left, universe).meet(_meaning(f.right, universe))
    if isinstance(f, Or):
        return _meaning(f.left, universe).join(_meaning(f.right, universe))
    raise TypeError(f"not a formula: {f!r}")


def meaning_by_scan(formula: Formula) -> PartialSet:
    """Meaning computed by evaluating the formula at every world; must
    coincide with meaning() and serves as its cross-check."""
    universe = kleene_universe(formula.arity)
    pos = 0
    neg = 0
    for i, world in enumerate(universe.atoms):
        v = _eval(formula, world)
        if v is TruthValue.TRUE:
            pos |= 1 << i
        elif v is TruthValue.FALSE:
            neg |= 1 << i
    return PartialSet(universe, pos, neg)


def _shared_arity(formulas: Iterable[Formula], fallback: int | None = None) -> int:
    arity = fallback
    for f in formulas:
        if arity is None:
            arity = f.arity
        elif f.arity != arity:
            raise ArityMismatchError("formulas have different arities")
    if arity is None:
        raise ValueError("no formulas and no arity given")
    return arity


def entails(premises: Sequence[Formula], conclusion: Formula) -> bool:
    """Consequence: at every world, min over the premises' values is at
    most the conclusion's value.  Empty premises use min {} = TRUE."""
    arity = _shared_arity(premises, conclusion.arity)
    if conclusion.arity != arity:
        raise ArityMismatchError("formulas have different arities")
    for world in worlds(arity):
        bound = min((_eval(g, world) for g in premises), default=TruthValue.TRUE)
        if bound > _eval(conclusion, world):
            return False
    return True


def equivalent(a: Formula, b: Formula) -> bool:
    """Pointwise equality of values over all worlds."""
    if a.arity != b.arity:
        raise ArityMismatchError("formulas have different arities")
    return all(_eval(a, w) == _eval(b, w) for w in worlds(a.arity))


def classically_valid(formula: Formula) -> bool:
    """Two-valued validity: TRUE at every neutral-free world.  The
    formula itself must be classical (no neutral constant)."""
    if not is_classical(formula):
        raise ValueError(f"{formula} is not a classical formula")
    return all(
        _eval(formula, w) is TruthValue.TRUE for w in classical_worlds(formula.arity)
    )


def classically_equivalent(a: Formula, b: Formula) -> bool:
    if a.arity != b.arity:
        raise ArityMismatchError("formulas have different arities")
    if not (is_classical(a) and is_classical(b)):
        raise ValueError("both formulas must be classical")
    return all(_eval(a, w) == _eval(b, w) for w in classical_worlds(a.arity))


def value_info_leq(a: TruthValue, b: TruthValue) -> bool:
    """Information order on truth values: N below both F and T."""
    return a == b or a is TruthValue.NEUTRAL


def info_leq(s: World, t: World) -> bool:
    """Componentwise information order on worlds: whatever s settles, t
    settles the same way; what s leaves neutral, t may decide."""
    if len(s) != len(t):
        raise ArityMismatchError("worlds have different lengths")
    return all(value_info_leq(a, b) for a, b in zip(s, t))


def dnf_formula_for(model_worlds: Iterable[World], arity: int) -> Formula:
    """A classical formula whose classical models are exactly the given
    worlds: the disjunction of their minterms in lexicographic order.
    The empty set yields the constant 0."""
    _check_cap(arity)
    chosen = sorted(set(model_worlds))
    for w in chosen:
        if len(w) != arity:
            raise ArityMismatchError(f"world {world_to_str(w)} has wrong length")
        if not is_classical_world(w):
            raise ValueError(f"world {world_to_str(w)} is not classical")
    if not chosen:
        return zero(arity)

    def minterm(w: World) -> Formula:
        literals: list[Formula] = [
            Var(i + 1, arity) if w[i] is TruthValue.TRUE else Not(Var(i + 1, arity))
            for i in range(arity)
        ]
        return reduce(And, literals)

    return reduce(Or, (minterm(w) for w in chosen))

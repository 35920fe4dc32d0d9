"""Partial probability: lifted classical measures and belief checking.

A classical probability lifts to partial events coordinatewise: the
value of (pos, neg) is (p(pos), p(neg)).  Composing the lifted measure
with formula meanings yields a belief assignment that satisfies every
coherence axiom by construction, which makes it a handy oracle.
"""

from partialprob import (
    BeliefAssignment,
    ClassicalMeasure,
    PartialSet,
    Universe,
    check_belief_axioms,
    check_derived_properties,
    check_measure_axioms,
    induced_belief_assignment,
    measure_from_classical,
    parse,
)

die = Universe(range(1, 7))
mu = measure_from_classical(ClassicalMeasure.uniform(die))

even = PartialSet.from_parts(die, {2, 4, 6}, {1, 3, 5})
small_even = PartialSet.from_parts(die, {2, 4}, {5})
print("mu(even)       =", mu(even))
print("mu(small_even) =", mu(small_even), "  (1/3 for, 1/6 against, 1/2 open)")

# The lifted measure satisfies the four axioms on any closed field;
# check them exhaustively on a three-outcome space (27 events).
coin_ish = Universe("abc")
field = []
full = coin_ish.full_mask
for pos in range(full + 1):
    free = full & ~pos
    neg = free
    while True:
        field.append(PartialSet(coin_ish, pos, neg))
        if neg == 0:
            break
        neg = (neg - 1) & free
violations = check_measure_axioms(measure_from_classical(ClassicalMeasure.uniform(coin_ish)), field)
print()
print(f"measure axioms on all {len(field)} events: {len(violations)} violations")

# Belief assignments: formulas priced with (for, against) pairs.
beliefs = BeliefAssignment(
    [
        (parse("p1", 1), (0.5, 0.2)),
        (parse("!p1", 1), (0.2, 0.5)),
    ]
)
report = check_belief_axioms(beliefs)
print()
print("hand-made beliefs coherent:", report.ok)

# Tamper with the negation entry and the checker pinpoints the axiom.
broken = BeliefAssignment(
    [
        (parse("p1", 1), (0.5, 0.2)),
        (parse("!p1", 1), (0.4, 0.1)),
    ]
)
for v in check_belief_axioms(broken).violations:
    print("violation:", v.kind, "-", v.message)

# Measure-induced beliefs pass everything, including the derived
# consequences of the axioms.
family = [parse(t, 2) for t in ["p1", "p2", "p1 & p2", "p1 | p2", "!p1", "n", "p1 | n", "p1 & n"]]
induced = induced_belief_assignment(family)
print()
print("induced beliefs:")
for f, v in induced.items():
    print(f"  b({f}) = {v}")
print("axiom violations:", len(check_belief_axioms(induced).violations))
print("derived-property violations:", len(check_derived_properties(induced)))

"""From an incoherent belief to a verified exploiting book.

Every coherence-axiom violation has a constructive answer: a small book,
with quotients taken straight from the beliefs, whose payoff is bad at
every world.  The synthesized certificate carries the book, the
re-verified verdict, and the full payoff table.
"""

import json

from partialprob import (
    BeliefAssignment,
    Not,
    parse,
    stake_solver,
    synthesize_all,
)

# Price a formula and its negation inconsistently: the swap of (0.5, 0.2)
# is (0.2, 0.5), but the bookie quotes (0.1, 0.4) on the negation.
beliefs = BeliefAssignment(
    [
        (parse("p1", 1), (0.5, 0.2)),
        (Not(parse("p1", 1)), (0.1, 0.4)),
    ]
)

outcome = synthesize_all(beliefs)
print(f"{len(outcome.certificates)} certificate(s)")
for cert in outcome.certificates:
    print()
    print("violation:", cert.violation.kind, "-", cert.violation.message)
    print("verdict:  ", cert.result.verdict.value)
    for bet in cert.book.bets:
        print(f"  bet on {bet.formula}: quotient {bet.quotient}, stake {bet.stake}")
    print("payoffs by world:")
    for world, payoff in cert.payoffs:
        print(f"  {world} -> {payoff}")
    if cert.note:
        print("note:", cert.note)

# The positive/negative sums agree here (0.6 each), so plain unit stakes
# cannot work; the stake solver finds stakes that break even exactly at
# undecided worlds and lose elsewhere.
quad = stake_solver(0.5, 0.2, 0.1, 0.4)
print()
print("solver stakes: h={0.h:g}, hp={0.hp:g}, k={0.k:g}, kp={0.kp:g}".format(quad))
print("balance: h*x + hp*z =", quad.h * 0.5 + quad.hp * 0.1, "= k*y + kp*w =", quad.k * 0.2 + quad.kp * 0.4)

# Certificates serialize to JSON for machine checking.
print()
print(json.dumps(outcome.certificates[0].to_json()["book"], indent=2))

# A coherent assignment synthesizes nothing.
coherent = BeliefAssignment(
    [
        (parse("p1", 1), (0.5, 0.2)),
        (Not(parse("p1", 1)), (0.2, 0.5)),
    ]
)
print()
print("coherent beliefs produce", len(synthesize_all(coherent).certificates), "certificates")

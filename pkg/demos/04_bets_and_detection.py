"""Bets with two-sided payoffs and Dutch Book detection.

A partial bet pays off in R^2: the first coordinate accrues when the
event verifies, the second (with reversed polarity) when it falsifies.
Payoffs below the diagonal are net good, above it net bad.  A book that
lands above the diagonal at every world is a Dutch Book.
"""

from partialprob import (
    Book,
    ClassicalBet,
    ClassicalBook,
    PartialBet,
    PartialValue,
    RPair,
    classical_worlds,
    classify,
    detect,
    parse,
    world_to_str,
    worlds,
)

bet = PartialBet(parse("p1", 1), PartialValue(0.2, 0.3), RPair(10.0, 5.0))
print("payoffs of a single bet (quotient (0.2, 0.3), stake (10, 5)):")
for w in worlds(1):
    p = bet.payoff(w)
    print(f"  {world_to_str(w)} -> {p}  [{classify(p).value}]")

# A bookmaker quoting (0.6, 0.2) on a formula that is always true is
# exploitable: selling the bet back (negative stakes) locks in a loss
# for them at every world.
always = parse("1 | p1", 1)
book = Book(1, (PartialBet(always, PartialValue(0.6, 0.2), RPair(-1.0, -1.0)),))
print()
print("book against a mispriced tautology:")
for w in worlds(1):
    print(f"  {world_to_str(w)} -> {book.payoff(w)}")
result = detect(book)
print("verdict:", result.verdict.value)

# Weak version: break even at best, lose somewhere.
weak = Book(1, (PartialBet(parse("p1", 1), PartialValue(1.0, 0.0), RPair(1.0, 1.0)),))
weak_result = detect(weak)
print()
print("buying p1 at quotient (1, 0):", weak_result.verdict.value)
print("strict loss at world:", world_to_str(weak_result.witness))

# Classical bets are the scalar special case.
classical = ClassicalBook(1, (ClassicalBet(parse("p1 | !p1", 1), 0.9, -1.0),))
print()
print("classical short on a tautology priced 0.9:", detect(classical).verdict.value)
print("payoff at each classical world:", [round(classical.payoff(w), 10) for w in classical_worlds(1)])

"""Partial events on a die roll.

An event can be settled positively, settled negatively, or left open.
A partial set records the two settled sides; everything else is
undetermined.  This walkthrough builds the algebra of partial events on
a six-sided die.
"""

from partialprob import PartialSet, Universe

die = Universe(range(1, 7))

# "Even": settled on every outcome, a two-sided (Boolean) event.
even = PartialSet.from_parts(die, pos={2, 4, 6}, neg={1, 3, 5})
# "Small even": happens on 2 or 4, fails on 5, and says nothing about
# the other outcomes.
small_even = PartialSet.from_parts(die, pos={2, 4}, neg={5})

print("even          =", even)
print("small_even    =", small_even)
print("even is two-sided:", even.is_boolean())
print("small_even is two-sided:", small_even.is_boolean())

print()
print("meet (both occur):   ", small_even.meet(even))
print("join (either occurs):", small_even.join(even))
print("negation of small_even:", small_even.negate())

# The order: a partial event is below another when it is positively
# weaker and negatively stronger.
narrower = PartialSet.from_parts(die, pos={2}, neg={1, 3, 5})
print()
print("narrower =", narrower)
print("narrower <= small_even:", narrower.leq(small_even))
print("small_even <= narrower:", small_even.leq(narrower))

# Constants: certain, impossible, and completely undetermined.
top = PartialSet.top(die)
bottom = PartialSet.bottom(die)
undetermined = PartialSet.neutral(die)
print()
print("x meet certain == x:", small_even.meet(top) == small_even)
print("x join impossible == x:", small_even.join(bottom) == small_even)
print("negating the undetermined event changes nothing:", undetermined.negate() == undetermined)

# De Morgan holds in the three-valued algebra as well.
lhs = small_even.meet(even).negate()
rhs = small_even.negate().join(even.negate())
print("De Morgan:", lhs == rhs)

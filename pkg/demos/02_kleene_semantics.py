"""Three-valued semantics: worlds, valuation, and meanings.

Worlds assign true/neutral/false to every variable.  A formula's meaning
is the partial set of worlds where it is true (positive models) and
false (negative models); neutral worlds belong to neither side.
"""

from partialprob import (
    Var,
    dnf_formula_for,
    entails,
    equivalent,
    evaluate,
    info_leq,
    meaning,
    meaning_by_scan,
    parse,
    world_from_str,
    world_to_str,
    worlds,
)

excluded_middle = parse("p1 | !p1", 1)

print("truth table of p1 | !p1:")
for w in worlds(1):
    print(f"  {world_to_str(w)} -> {evaluate(excluded_middle, w).char}")
print("the law of excluded middle is not a three-valued tautology")

print()
print("is it entailed by the constant 1?", entails([parse("1", 1)], excluded_middle))
print("is it entailed by the constant n?", entails([parse("n", 1)], excluded_middle))

# Meanings: computed by structural recursion, cross-checked by scanning
# every world.
m = meaning(excluded_middle)
print()
print("positive models:", sorted(world_to_str(w) for w in m.pos))
print("negative models:", sorted(world_to_str(w) for w in m.neg))
print("recursion agrees with the world scan:", m == meaning_by_scan(excluded_middle))

# Equivalence is pointwise equality of values at every world.
print()
print("De Morgan equivalence:", equivalent(parse("!(p1 & p2)", 2), parse("!p1 | !p2", 2)))
print("p1 | !p1 equivalent to 1:", equivalent(excluded_middle, parse("1", 1)))

# The information order: a world refines another by settling neutral
# components.  Values can only grow more informative along it.
s = world_from_str("NN")
t = world_from_str("TF")
f = parse("p1 & (p2 | !p1)", 2)
print()
print(f"{world_to_str(s)} refines to {world_to_str(t)}:", info_leq(s, t))
print(f"value at NN: {evaluate(f, s).char}, value at TF: {evaluate(f, t).char}")

# Any set of classical worlds is the model set of some formula.
target = [world_from_str("TF"), world_from_str("FT")]
g = dnf_formula_for(target, 2)
print()
print("formula with models {TF, FT}:", g)
print("check:", sorted(world_to_str(w) for w in meaning(g).pos))

# But not every partial set of worlds is a meaning: see the corollary
# suite (`partialprob verify --suite corollary`).
print()
print("meaning of p1:", meaning(Var(1, 1)))

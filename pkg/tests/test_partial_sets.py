"""Partial-set algebra: operations, order, and generated subalgebras."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialprob import (
    PartialSet,
    Universe,
    UniverseMismatchError,
    Var,
    generated_subalgebra,
    kleene_universe,
    meaning,
)

DIE = Universe(range(1, 7))


def ps(pos, neg, universe=DIE):
    return PartialSet.from_parts(universe, pos, neg)


@st.composite
def die_sets(draw):
    # For each atom: positive, negative, or undetermined.
    sides = draw(st.lists(st.sampled_from((0, 1, 2)), min_size=6, max_size=6))
    pos = {a for a, s in zip(DIE.atoms, sides) if s == 1}
    neg = {a for a, s in zip(DIE.atoms, sides) if s == 2}
    return ps(pos, neg)


class TestConstruction:
    def test_disjointness_enforced(self):
        with pytest.raises(ValueError):
            ps({1, 2}, {2, 3})

    def test_subsets_must_fit_the_universe(self):
        with pytest.raises(UniverseMismatchError):
            ps({7}, set())

    def test_duplicate_atoms_rejected(self):
        with pytest.raises(ValueError):
            Universe([1, 1, 2])

    def test_constants(self):
        assert PartialSet.top(DIE).pos == frozenset(range(1, 7))
        assert PartialSet.bottom(DIE).neg == frozenset(range(1, 7))
        n = PartialSet.neutral(DIE)
        assert n.pos == n.neg == frozenset()


class TestOperations:
    def test_meet_on_die_events(self):
        assert ps({2, 4}, {5}).meet(ps({2, 4, 6}, {1, 3, 5})) == ps({2, 4}, {1, 3, 5})

    def test_meet_identities(self):
        x = ps({2, 4}, {5})
        assert x.meet(PartialSet.top(DIE)) == x
        assert x.meet(PartialSet.bottom(DIE)) == PartialSet.bottom(DIE)

    def test_join_on_die_events(self):
        assert ps({2, 4}, {5}).join(ps({2, 4, 6}, {1, 3, 5})) == ps({2, 4, 6}, {5})

    def test_join_identities(self):
        x = ps({2, 4}, {5})
        assert x.join(PartialSet.bottom(DIE)) == x
        assert x.join(PartialSet.top(DIE)) == PartialSet.top(DIE)

    def test_negate(self):
        assert ps({2, 4}, {5}).negate() == ps({5}, {2, 4})
        assert PartialSet.neutral(DIE).negate() == PartialSet.neutral(DIE)

    def test_universe_mismatch_is_an_error(self):
        other = Universe(range(1, 4))
        with pytest.raises(UniverseMismatchError):
            ps({2}, {3}).meet(PartialSet.top(other))
        with pytest.raises(UniverseMismatchError):
            ps({2}, {3}).leq(PartialSet.top(other))

    def test_leq_examples(self):
        assert ps({2}, {1, 3, 5}).leq(ps({2, 4}, {5}))
        assert PartialSet.bottom(DIE).leq(ps({2, 4}, {5}))
        assert not ps({1}, {2}).leq(ps({2}, {1}))

    def test_is_boolean(self):
        assert ps({2, 4, 6}, {1, 3, 5}).is_boolean()
        assert not ps({2, 4}, {5}).is_boolean()
        assert not PartialSet.neutral(DIE).is_boolean()


class TestAlgebraLaws:
    @given(die_sets(), die_sets())
    def test_commutative(self, a, b):
        assert a.meet(b) == b.meet(a)
        assert a.join(b) == b.join(a)

    @given(die_sets(), die_sets(), die_sets())
    def test_associative(self, a, b, c):
        assert a.meet(b.meet(c)) == a.meet(b).meet(c)
        assert a.join(b.join(c)) == a.join(b).join(c)

    @given(die_sets())
    def test_idempotent_and_involution(self, a):
        assert a.meet(a) == a
        assert a.join(a) == a
        assert a.negate().negate() == a

    @given(die_sets(), die_sets())
    def test_absorption(self, a, b):
        assert a.meet(a.join(b)) == a
        assert a.join(a.meet(b)) == a

    @given(die_sets(), die_sets())
    def test_de_morgan(self, a, b):
        assert a.meet(b).negate() == a.negate().join(b.negate())

    @given(die_sets(), die_sets())
    def test_order_characterizations(self, a, b):
        assert a.leq(b) == (a.meet(b) == a) == (a.join(b) == b)

    @given(die_sets(), die_sets(), die_sets())
    def test_order_is_a_partial_order(self, a, b, c):
        assert a.leq(a)
        if a.leq(b) and b.leq(a):
            assert a == b
        if a.leq(b) and b.leq(c):
            assert a.leq(c)

    @given(die_sets(), die_sets())
    def test_boolean_sets_are_closed_under_the_operations(self, a, b):
        full = DIE.full_mask
        a = PartialSet(DIE, a.pos_bits, full & ~a.pos_bits)
        b = PartialSet(DIE, b.pos_bits, full & ~b.pos_bits)
        assert a.meet(b).is_boolean()
        assert a.join(b).is_boolean()
        assert a.negate().is_boolean()


def naive_closure(generators, universe):
    """Independent oracle: fixpoint over frozenset pairs, no bitmasks."""
    def meet(a, b):
        return (a[0] & b[0], a[1] | b[1])

    def join(a, b):
        return (a[0] | b[0], a[1] & b[1])

    atoms = frozenset(universe.atoms)
    current = {
        (atoms, frozenset()),
        (frozenset(), atoms),
        (frozenset(), frozenset()),
    } | {(g.pos, g.neg) for g in generators}
    while True:
        extra = set()
        for a in current:
            extra.add((a[1], a[0]))
            for b in current:
                extra.add(meet(a, b))
                extra.add(join(a, b))
        if extra <= current:
            return current
        current |= extra


class TestGeneratedSubalgebra:
    def test_no_generators_gives_the_three_constants(self):
        u = Universe(["a"])
        closure = generated_subalgebra([], u)
        assert closure == {PartialSet.top(u), PartialSet.bottom(u), PartialSet.neutral(u)}

    def test_requires_a_universe_when_empty(self):
        with pytest.raises(ValueError):
            generated_subalgebra([])

    def test_constant_generator_adds_nothing(self):
        u = Universe(["a"])
        assert generated_subalgebra([PartialSet.top(u)], u) == generated_subalgebra([], u)

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            generated_subalgebra([PartialSet.top(DIE)], Universe(["a"]))

    def test_matches_the_naive_oracle_on_variable_meanings(self):
        universe = kleene_universe(1)
        closure = generated_subalgebra([meaning(Var(1, 1))], universe)
        oracle = naive_closure([meaning(Var(1, 1))], universe)
        assert {(s.pos, s.neg) for s in closure} == oracle
        # Frozen size, re-derived by the oracle above: a strict subset of
        # the 27 partial sets on the three worlds.
        assert len(closure) == 11

    @given(die_sets(), die_sets())
    def test_closure_is_closed_under_reapplication(self, a, b):
        closure = generated_subalgebra([a, b])
        sample = sorted(closure, key=lambda s: (s.pos_bits, s.neg_bits))[:8]
        for x in sample:
            assert x.negate() in closure
            for y in sample:
                assert x.meet(y) in closure
                assert x.join(y) in closure

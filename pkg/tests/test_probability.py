"""Lifted measures, belief assignments, and the axiom checkers."""

import random

import pytest

from partialprob import (
    And,
    BeliefAssignment,
    ClassicalMeasure,
    Not,
    Or,
    PartialSet,
    PartialValue,
    Universe,
    UniverseMismatchError,
    Var,
    check_belief_axioms,
    check_derived_properties,
    check_measure_axioms,
    entails,
    induced_belief_assignment,
    measure_from_classical,
    neutral,
    one,
    pair_approx,
    parse,
    sigma,
    zero,
)
from genutil import random_formula_family

DIE = Universe(range(1, 7))


def all_partial_sets(universe):
    full = universe.full_mask
    for pos in range(full + 1):
        free = full & ~pos
        neg = free
        while True:
            yield PartialSet(universe, pos, neg)
            if neg == 0:
                break
            neg = (neg - 1) & free


class TestClassicalMeasure:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            ClassicalMeasure(DIE, (0.5,) * 6)
        with pytest.raises(ValueError):
            ClassicalMeasure(DIE, (1.5, -0.5, 0, 0, 0, 0))

    def test_die_values(self):
        mu = measure_from_classical(ClassicalMeasure.uniform(DIE))
        boolean_event = PartialSet.from_parts(DIE, {2, 4, 6}, {1, 3, 5})
        partial_event = PartialSet.from_parts(DIE, {2, 4}, {5})
        assert pair_approx(mu(boolean_event), PartialValue(0.5, 0.5))
        assert pair_approx(mu(partial_event), PartialValue(1 / 3, 1 / 6))

    def test_neutral_event_has_zero_measure(self):
        mu = measure_from_classical(ClassicalMeasure.uniform(DIE))
        assert mu(PartialSet.neutral(DIE)) == PartialValue(0.0, 0.0)

    def test_universe_mismatch(self):
        mu = measure_from_classical(ClassicalMeasure.uniform(DIE))
        with pytest.raises(UniverseMismatchError):
            mu(PartialSet.top(Universe("ab")))

    def test_from_map(self):
        m = ClassicalMeasure.from_map(DIE, {1: 0.5, 2: 0.5})
        assert m.prob_bits(DIE.mask_of({1, 2})) == pytest.approx(1.0)


class TestMeasureAxioms:
    def test_lifted_measure_passes_exhaustively(self):
        # Full field over a three-atom space: 27 events, 729 pairs.
        u = Universe("abc")
        mu = measure_from_classical(ClassicalMeasure.uniform(u))
        field = list(all_partial_sets(u))
        assert check_measure_axioms(mu, field) == []

    def test_axiom_one_violation(self):
        u = Universe("abc")
        real = measure_from_classical(ClassicalMeasure.uniform(u))

        def broken(event):
            if event == PartialSet.top(u):
                return PartialValue(0.9, 0.0)
            return real(event)

        kinds = {v.kind for v in check_measure_axioms(broken, all_partial_sets(u))}
        assert "measure-1" in kinds

    def test_axiom_three_violation(self):
        u = Universe("abc")
        real = measure_from_classical(ClassicalMeasure.uniform(u))
        target = PartialSet.from_parts(u, {"a"}, set())

        def broken(event):
            if event == target:
                return PartialValue(0.5, 0.5)
            return real(event)

        kinds = {v.kind for v in check_measure_axioms(broken, all_partial_sets(u))}
        assert "measure-3" in kinds

    def test_axiom_four_violation(self):
        u = Universe("abc")
        real = measure_from_classical(ClassicalMeasure.uniform(u))
        target = PartialSet.from_parts(u, {"a"}, set())

        def broken(event):
            if event == target:
                return PartialValue(0.0, 0.5)
            return real(event)

        kinds = {v.kind for v in check_measure_axioms(broken, all_partial_sets(u))}
        assert "measure-4" in kinds

    def test_closure_failure_is_reported_not_checked(self):
        u = Universe("abc")
        mu = measure_from_classical(ClassicalMeasure.uniform(u))
        partial_field = [PartialSet.top(u), PartialSet.from_parts(u, {"a"}, {"b"})]
        violations = check_measure_axioms(mu, partial_field)
        assert violations
        assert all(v.kind == "closure" for v in violations)


class TestBeliefAssignment:
    def test_duplicates_rejected(self):
        f = parse("p1", 1)
        with pytest.raises(ValueError):
            BeliefAssignment([(f, PartialValue(0.5, 0.2)), (f, PartialValue(0.1, 0.1))])

    def test_arity_must_agree(self):
        with pytest.raises(ValueError):
            BeliefAssignment([(Var(1, 1), (0.5, 0.2)), (Var(1, 2), (0.1, 0.1))])

    def test_tuple_values_are_coerced(self):
        b = BeliefAssignment([(Var(1, 1), (0.5, 0.2))])
        assert b[Var(1, 1)] == PartialValue(0.5, 0.2)

    def test_values_validated(self):
        with pytest.raises(ValueError):
            BeliefAssignment([(Var(1, 1), (0.8, 0.8))])

    def test_json_round_trip(self):
        b = BeliefAssignment([(parse("p1 & p2", 2), PartialValue(0.25, 0.5))])
        again = BeliefAssignment.from_json(b.to_json())
        assert again.formulas == b.formulas
        assert again[parse("p1 & p2", 2)] == PartialValue(0.25, 0.5)

    def test_json_accepts_decimal_strings(self):
        b = BeliefAssignment.from_json(
            {"arity": 1, "beliefs": [{"formula": "p1", "value": ["0.25", "0.5"]}]}
        )
        assert b[Var(1, 1)] == PartialValue(0.25, 0.5)

    def test_malformed_json(self):
        with pytest.raises(ValueError):
            BeliefAssignment.from_json({"beliefs": []})
        with pytest.raises(ValueError):
            BeliefAssignment.from_json({"arity": 1, "beliefs": [{"formula": "p1", "value": [0.5]}]})


class TestBeliefAxioms:
    def test_axiom_one_violation(self):
        f = parse("1 | p1", 1)
        report = check_belief_axioms(BeliefAssignment([(f, (0.6, 0.2))]))
        # Entailed by 1 means entailed by n too, and y > 0, so axiom 4
        # fires alongside axiom 1.
        assert [v.kind for v in report.violations] == ["axiom-1", "axiom-4"]
        assert report.violations[0].subjects == (f,)

    def test_axiom_one_violation_alone(self):
        f = parse("1 | p1", 1)
        report = check_belief_axioms(BeliefAssignment([(f, (0.6, 0.0))]))
        assert [v.kind for v in report.violations] == ["axiom-1"]

    def test_axiom_three_instance_passes(self):
        f = parse("p1", 1)
        b = BeliefAssignment([(f, (0.5, 0.3)), (Not(f), (0.3, 0.5))])
        assert check_belief_axioms(b).ok

    def test_axiom_three_violation(self):
        f = parse("p1", 1)
        b = BeliefAssignment([(f, (0.5, 0.3)), (Not(f), (0.2, 0.5))])
        kinds = [v.kind for v in check_belief_axioms(b).violations]
        assert kinds == ["axiom-3"]

    def test_axiom_two_detected_structurally(self):
        f, g = Var(1, 2), Var(2, 2)
        b = BeliefAssignment(
            [
                (f, (0.5, 0.3)),
                (g, (0.4, 0.4)),
                (Or(f, g), (0.5, 0.1)),
                (And(f, g), (0.2, 0.5)),
            ]
        )
        report = check_belief_axioms(b)
        assert [v.kind for v in report.violations] == ["axiom-2"]
        assert report.violations[0].subjects == (f, g, Or(f, g), And(f, g))

    def test_axiom_two_missing_compound_is_unchecked(self):
        f, g = Var(1, 2), Var(2, 2)
        b = BeliefAssignment([(f, (0.5, 0.3)), (g, (0.4, 0.4)), (And(f, g), (0.2, 0.5))])
        report = check_belief_axioms(b)
        assert report.ok
        assert [u.kind for u in report.unchecked] == ["axiom-2"]
        assert "disjunction" in report.unchecked[0].reason

    def test_axiom_four_violation(self):
        f = parse("p1 | !p1", 1)
        report = check_belief_axioms(BeliefAssignment([(f, (0.1, 0.3))]))
        assert [v.kind for v in report.violations] == ["axiom-4"]

    def test_measure_induced_beliefs_are_coherent(self):
        rng = random.Random(11)
        for _ in range(25):
            arity = rng.randint(1, 3)
            family = random_formula_family(rng, arity)
            b = induced_belief_assignment(family)
            report = check_belief_axioms(b)
            assert report.violations == []
            assert check_derived_properties(b) == []


class TestDerivedProperties:
    def test_neutral_value(self):
        assert check_derived_properties(BeliefAssignment([(neutral(1), (0.0, 0.0))])) == []
        bad = check_derived_properties(BeliefAssignment([(neutral(1), (0.1, 0.0))]))
        # n entails n, so the bound property fires along with the value one.
        assert [v.kind for v in bad] == ["derived-1", "derived-3"]

    def test_entailing_zero_forces_bottom(self):
        f = And(Var(1, 1), zero(1))
        assert entails([f], zero(1))
        bad = check_derived_properties(BeliefAssignment([(f, (0.0, 0.9))]))
        assert [v.kind for v in bad] == ["derived-2"]

    def test_entailing_neutral_bounds_the_value(self):
        f = parse("p1 & !p1 & n", 1)
        assert entails([f], neutral(1))
        bad = check_derived_properties(BeliefAssignment([(f, (0.1, 0.0))]))
        assert [v.kind for v in bad] == ["derived-3"]

    def test_additive_split(self):
        f = Var(1, 1)
        good = BeliefAssignment(
            [(f, (0.5, 0.3)), (Or(f, neutral(1)), (0.5, 0.0)), (And(f, neutral(1)), (0.0, 0.3))]
        )
        assert check_derived_properties(good) == []
        bad = BeliefAssignment(
            [(f, (0.5, 0.3)), (Or(f, neutral(1)), (0.4, 0.0)), (And(f, neutral(1)), (0.0, 0.3))]
        )
        assert [v.kind for v in check_derived_properties(bad)] == ["derived-4"]

    def test_die_induced_beliefs_pass(self):
        formulas = [
            parse(t, 2)
            for t in ["p1", "p2", "!p1", "n", "p1 & p2", "p1 | p2", "p1 | n", "p1 & n", "1", "0"]
        ]
        b = induced_belief_assignment(formulas)
        assert check_derived_properties(b) == []


class TestInducedAssignment:
    def test_negation_is_sigma(self):
        b = induced_belief_assignment([Var(1, 1), Not(Var(1, 1))])
        assert pair_approx(b[Not(Var(1, 1))], sigma(b[Var(1, 1)]))

    def test_valid_formula_gets_top(self):
        b = induced_belief_assignment([one(2)])
        assert pair_approx(b[one(2)], PartialValue(1.0, 0.0))

    def test_rejects_mismatched_measure(self):
        with pytest.raises(UniverseMismatchError):
            induced_belief_assignment([Var(1, 1)], ClassicalMeasure.uniform(DIE))

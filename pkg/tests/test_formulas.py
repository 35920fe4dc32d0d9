"""Formula AST, grammar, and text round-trips."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialprob import (
    And,
    Const,
    Not,
    Or,
    ParseError,
    TruthValue,
    Var,
    is_classical,
    neutral,
    one,
    parse,
    to_text,
    zero,
)
from partialprob.verification import random_formula


class TestAst:
    def test_var_index_bounds(self):
        Var(1, 1)
        Var(3, 3)
        with pytest.raises(ValueError):
            Var(0, 2)
        with pytest.raises(ValueError):
            Var(3, 2)

    def test_arity_must_be_positive(self):
        with pytest.raises(ValueError):
            Var(1, 0)
        with pytest.raises(ValueError):
            Const(TruthValue.TRUE, -1)

    def test_binary_operands_share_arity(self):
        with pytest.raises(ValueError):
            And(Var(1, 1), Var(1, 2))
        assert Or(Var(1, 2), Var(2, 2)).arity == 2
        assert Not(Var(1, 3)).arity == 3

    def test_structural_equality(self):
        assert parse("p1 & !p2", 2) == And(Var(1, 2), Not(Var(2, 2)))
        assert Var(1, 1) != Var(1, 2)

    def test_is_classical(self):
        assert is_classical(parse("p1 & !p2 | 0", 2))
        assert not is_classical(parse("p1 & n", 2))
        assert not is_classical(neutral(1))
        assert is_classical(one(1)) and is_classical(zero(1))


class TestParser:
    def test_basic(self):
        assert parse("p1 & !p2", 2) == And(Var(1, 2), Not(Var(2, 2)))

    def test_precedence(self):
        assert parse("p1 | p2 & p3", 3) == Or(Var(1, 3), And(Var(2, 3), Var(3, 3)))
        assert parse("!p1 & p2", 2) == And(Not(Var(1, 2)), Var(2, 2))

    def test_left_associativity(self):
        assert parse("p1 & p2 & p3", 3) == And(And(Var(1, 3), Var(2, 3)), Var(3, 3))
        assert parse("p1 | p2 | p3", 3) == Or(Or(Var(1, 3), Var(2, 3)), Var(3, 3))

    def test_parentheses_and_whitespace(self):
        assert parse(" ( p1 | p2 ) & p3 ", 3) == And(Or(Var(1, 3), Var(2, 3)), Var(3, 3))
        assert parse("!(p1 & p2)", 2) == Not(And(Var(1, 2), Var(2, 2)))

    def test_constants(self):
        assert parse("0", 1) == zero(1)
        assert parse("1", 1) == one(1)
        assert parse("n", 1) == neutral(1)
        assert parse("!!n", 1) == Not(Not(neutral(1)))

    def test_index_out_of_range(self):
        with pytest.raises(ParseError):
            parse("p3", 2)

    def test_error_positions(self):
        with pytest.raises(ParseError) as err:
            parse("p1 & $", 2)
        assert err.value.position == 5
        with pytest.raises(ParseError) as err:
            parse("p1 &", 2)
        assert err.value.position == 4
        with pytest.raises(ParseError) as err:
            parse("(p1 | p2", 2)
        assert err.value.position == 8
        with pytest.raises(ParseError) as err:
            parse("p1 p2", 2)
        assert err.value.position == 3

    def test_bare_p_is_an_error(self):
        with pytest.raises(ParseError):
            parse("p & p1", 2)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse("", 2)

    def test_multi_digit_indices(self):
        assert parse("p10", 10) == Var(10, 10)


class TestRendering:
    def test_needs_parentheses(self):
        assert to_text(And(Or(Var(1, 2), Var(2, 2)), Var(1, 2))) == "(p1 | p2) & p1"
        assert to_text(Not(And(Var(1, 2), Var(2, 2)))) == "!(p1 & p2)"
        assert to_text(And(Var(1, 2), And(Var(2, 2), Var(1, 2)))) == "p1 & (p2 & p1)"

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=3))
    def test_round_trip(self, seed, arity):
        f = random_formula(random.Random(seed), arity, max_depth=4)
        assert parse(to_text(f), arity) == f

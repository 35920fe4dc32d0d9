"""Three-valued truth values and the formula language.

Formulas are built from variables p1..pN, the constants 0 (falsum),
1 (verum) and n (neutral), negation, conjunction and disjunction.  The
text grammar uses `!`, `&`, `|` with precedence ! > & > |, both binary
operators left-associative, parentheses, and ignores whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .pairs import PartialValue


class TruthValue(IntEnum):
    """Truth values with the total order FALSE < NEUTRAL < TRUE."""

    FALSE = 0
    NEUTRAL = 1
    TRUE = 2

    @property
    def negated(self) -> "TruthValue":
        # Swaps FALSE/TRUE and fixes NEUTRAL.
        return TruthValue(2 - self.value)

    @property
    def pair(self) -> PartialValue:
        """Embedding into the value triangle: F->(0,1), N->(0,0), T->(1,0)."""
        return _VALUE_PAIRS[self]

    @property
    def char(self) -> str:
        return "FNT"[self.value]

    def __repr__(self) -> str:
        return self.char

    @classmethod
    def from_char(cls, c: str) -> "TruthValue":
        try:
            return _CHAR_VALUES[c]
        except KeyError:
            raise ValueError(f"invalid truth value character {c!r} (expected T, N or F)") from None


_VALUE_PAIRS = {
    TruthValue.FALSE: PartialValue(0.0, 1.0),
    TruthValue.NEUTRAL: PartialValue(0.0, 0.0),
    TruthValue.TRUE: PartialValue(1.0, 0.0),
}
_CHAR_VALUES = {"F": TruthValue.FALSE, "N": TruthValue.NEUTRAL, "T": TruthValue.TRUE}


class Formula:
    """Base class for formula nodes; subclasses are frozen dataclasses
    compared structurally.  Every node knows its arity (the number of
    variables of the language it belongs to)."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


def _check_arity(arity: int) -> None:
    if not isinstance(arity, int) or arity < 1:
        raise ValueError(f"arity must be a positive integer, got {arity!r}")


@dataclass(frozen=True)
class Var(Formula):
    index: int
    arity: int

    def __post_init__(self) -> None:
        _check_arity(self.arity)
        if not 1 <= self.index <= self.arity:
            raise ValueError(f"variable index {self.index} outside 1..{self.arity}")


@dataclass(frozen=True)
class Const(Formula):
    value: TruthValue
    arity: int

    def __post_init__(self) -> None:
        _check_arity(self.arity)


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    @property
    def arity(self) -> int:
        return self.operand.arity


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        if self.left.arity != self.right.arity:
            raise ValueError("operands have different arities")

    @property
    def arity(self) -> int:
        return self.left.arity


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        if self.left.arity != self.right.arity:
            raise ValueError("operands have different arities")

    @property
    def arity(self) -> int:
        return self.left.arity


def zero(arity: int) -> Const:
    return Const(TruthValue.FALSE, arity)


def one(arity: int) -> Const:
    return Const(TruthValue.TRUE, arity)


def neutral(arity: int) -> Const:
    return Const(TruthValue.NEUTRAL, arity)


def is_classical(formula: Formula) -> bool:
    """True when the formula contains no neutral constant."""
    if isinstance(formula, Const):
        return formula.value is not TruthValue.NEUTRAL
    if isinstance(formula, Var):
        return True
    if isinstance(formula, Not):
        return is_classical(formula.operand)
    return is_classical(formula.left) and is_classical(formula.right)


_CONST_TEXT = {TruthValue.FALSE: "0", TruthValue.TRUE: "1", TruthValue.NEUTRAL: "n"}


def to_text(formula: Formula) -> str:
    """Render a formula in the text grammar; parse(to_text(f)) == f."""
    if isinstance(formula, Var):
        return f"p{formula.index}"
    if isinstance(formula, Const):
        return _CONST_TEXT[formula.value]
    if isinstance(formula, Not):
        inner = to_text(formula.operand)
        if isinstance(formula.operand, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"
    if isinstance(formula, And):
        left = to_text(formula.left)
        if isinstance(formula.left, Or):
            left = f"({left})"
        right = to_text(formula.right)
        if isinstance(formula.right, (And, Or)):
            right = f"({right})"
        return f"{left} & {right}"
    if isinstance(formula, Or):
        left = to_text(formula.left)
        right = to_text(formula.right)
        if isinstance(formula.right, Or):
            right = f"({right})"
        return f"{left} | {right}"
    raise TypeError(f"not a formula: {formula!r}")


class ParseError(ValueError):
    """Syntax or arity error in formula text, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


_Token = tuple[str, object, int]  # (kind, payload, position)


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c in "()!&|":
            tokens.append((c, None, i))
            i += 1
            continue
        if c in "01n":
            tokens.append(("const", c, i))
            i += 1
            continue
        if c == "p":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable name needs an index, e.g. p1", i)
            tokens.append(("var", int(text[i + 1 : j]), i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", None, n))
    return tokens


_CONST_BY_CHAR = {"0": TruthValue.FALSE, "1": TruthValue.TRUE, "n": TruthValue.NEUTRAL}


class _Parser:
    def __init__(self, tokens: list[_Token], arity: int):
        self.tokens = tokens
        self.arity = arity
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse_or(self) -> Formula:
        node = self.parse_and()
        while self.peek()[0] == "|":
            self.advance()
            node = Or(node, self.parse_and())
        return node

    def parse_and(self) -> Formula:
        node = self.parse_unary()
        while self.peek()[0] == "&":
            self.advance()
            node = And(node, self.parse_unary())
        return node

    def parse_unary(self) -> Formula:
        kind, _, position = self.peek()
        if kind == "!":
            self.advance()
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        kind, payload, position = self.advance()
        if kind == "var":
            if not 1 <= payload <= self.arity:
                raise ParseError(
                    f"variable p{payload} exceeds arity {self.arity}", position
                )
            return Var(payload, self.arity)
        if kind == "const":
            return Const(_CONST_BY_CHAR[payload], self.arity)
        if kind == "(":
            node = self.parse_or()
            kind, _, position = self.advance()
            if kind != ")":
                raise ParseError("expected ')'", position)
            return node
        raise ParseError("expected a variable, constant, '!' or '('", position)


def parse(text: str, arity: int) -> Formula:
    """Parse formula text for the language with variables p1..p<arity>."""
    _check_arity(arity)
    parser = _Parser(_tokenize(text), arity)
    node = parser.parse_or()
    kind, _, position = parser.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", position)
    return node

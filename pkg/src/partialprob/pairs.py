"""Value pairs: partial probability values and general R^2 points.

A partial probability value (x, y) splits belief about an event into a
positive degree x (it happens) and a negative degree y (it fails), with
x + y <= 1.  Sums, differences, stakes and payoffs leave that triangle,
so unconstrained pairs get their own type.  Both are ordered by the
product order with the second axis reversed:

    (x, y) <= (w, z)  iff  x <= w and z <= y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Global tolerance for every equality/inequality check on reals.
EPSILON = 1e-9


def approx_eq(a: float, b: float, eps: float = EPSILON) -> bool:
    return abs(a - b) <= eps


def approx_leq(a: float, b: float, eps: float = EPSILON) -> bool:
    return a <= b + eps


def _uv(p) -> tuple[float, float]:
    if isinstance(p, PartialValue):
        return p.x, p.y
    if isinstance(p, RPair):
        return p.u, p.v
    raise TypeError(f"expected a value pair, got {type(p).__name__}")


@dataclass(frozen=True)
class RPair:
    """A point of R^2: stake, payoff, or sum/difference of partial values."""

    u: float
    v: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise ValueError(f"non-finite pair ({self.u}, {self.v})")

    def __add__(self, other) -> "RPair":
        ou, ov = _uv(other)
        return RPair(self.u + ou, self.v + ov)

    def __sub__(self, other) -> "RPair":
        ou, ov = _uv(other)
        return RPair(self.u - ou, self.v - ov)

    def __neg__(self) -> "RPair":
        return RPair(-self.u, -self.v)

    def __mul__(self, other) -> "RPair":
        # Pointwise product: (u, v)(u', v') = (uu', vv').
        ou, ov = _uv(other)
        return RPair(self.u * ou, self.v * ov)

    def as_tuple(self) -> tuple[float, float]:
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"({self.u:g}, {self.v:g})"


@dataclass(frozen=True)
class PartialValue:
    """A pair (x, y) with x, y in [0, 1] and x + y <= 1.

    Serves as probability value, betting quotient, and as the image of
    the truth values under F -> (0, 1), N -> (0, 0), T -> (1, 0).
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite value ({self.x}, {self.y})")
        if self.x < -EPSILON or self.x > 1 + EPSILON:
            raise ValueError(f"first coordinate {self.x} outside [0, 1]")
        if self.y < -EPSILON or self.y > 1 + EPSILON:
            raise ValueError(f"second coordinate {self.y} outside [0, 1]")
        if self.x + self.y > 1 + EPSILON:
            raise ValueError(f"({self.x}, {self.y}) has coordinate sum > 1")

    def rpair(self) -> RPair:
        return RPair(self.x, self.y)

    def __add__(self, other) -> RPair:
        ou, ov = _uv(other)
        return RPair(self.x + ou, self.y + ov)

    def __sub__(self, other) -> RPair:
        ou, ov = _uv(other)
        return RPair(self.x - ou, self.y - ov)

    def __neg__(self) -> RPair:
        return RPair(-self.x, -self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x:g}, {self.y:g})"


#: Maximum and minimum of the value triangle under the pair order.
TOP_VALUE = PartialValue(1.0, 0.0)
BOTTOM_VALUE = PartialValue(0.0, 1.0)
NEUTRAL_VALUE = PartialValue(0.0, 0.0)


def sigma(value: PartialValue) -> PartialValue:
    """Swap map (x, y) -> (y, x); negation at the value level."""
    return PartialValue(value.y, value.x)


def pair_leq(a, b, eps: float = EPSILON) -> bool:
    """The order (u, v) <= (u', v') iff u <= u' and v' <= v, within eps."""
    au, av = _uv(a)
    bu, bv = _uv(b)
    return au <= bu + eps and bv <= av + eps


def pair_approx(a, b, eps: float = EPSILON) -> bool:
    au, av = _uv(a)
    bu, bv = _uv(b)
    return abs(au - bu) <= eps and abs(av - bv) <= eps


def pv_leq(a: PartialValue, b: PartialValue, eps: float = EPSILON) -> bool:
    """Partial order on probability values; (1,0) is top, (0,1) bottom."""
    return pair_leq(a, b, eps)

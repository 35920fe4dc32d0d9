"""Finite partial-set algebra.

A partial set over a universe S is a pair of disjoint subsets (pos, neg):
pos collects the elements where the event positively occurs, neg those
where it fails, and the rest is undetermined.  The algebra carries meet,
join and an involutive negation

    (A, B) meet (C, D) = (A & C, B | D)
    (A, B) join (C, D) = (A | C, B & D)
    -(A, B)            = (B, A)

with constants bottom = (0, S), top = (S, 0), neutral = (0, 0), and the
order (A, B) <= (C, D) iff A <= C and D <= B.

Subsets are stored as integer bitmasks over the universe's atom order, so
universes with hundreds of thousands of atoms stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator


class UniverseMismatchError(ValueError):
    """Raised when operands live on different universes."""


class Universe:
    """Finite ordered set of atoms; atom positions index the bitmasks."""

    __slots__ = ("atoms", "_index", "_hash")

    def __init__(self, atoms: Iterable[Hashable]):
        self.atoms: tuple = tuple(atoms)
        self._index = {atom: i for i, atom in enumerate(self.atoms)}
        if len(self._index) != len(self.atoms):
            raise ValueError("duplicate atoms in universe")
        self._hash = hash(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator:
        return iter(self.atoms)

    def __contains__(self, atom) -> bool:
        return atom in self._index

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Universe) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Universe({len(self.atoms)} atoms)"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def index(self, atom) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise UniverseMismatchError(f"{atom!r} is not in this universe") from None

    def mask_of(self, atoms: Iterable) -> int:
        mask = 0
        for atom in atoms:
            mask |= 1 << self.index(atom)
        return mask

    def atoms_of(self, mask: int) -> tuple:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.atoms[low.bit_length() - 1])
            mask ^= low
        return tuple(out)


@dataclass(frozen=True)
class PartialSet:
    """Disjoint (pos, neg) bitmask pair over a fixed universe."""

    universe: Universe
    pos_bits: int
    neg_bits: int

    def __post_init__(self) -> None:
        full = self.universe.full_mask
        if self.pos_bits & ~full or self.neg_bits & ~full:
            raise ValueError("subset mask outside the universe")
        if self.pos_bits & self.neg_bits:
            raise ValueError("pos and neg must be disjoint")

    @classmethod
    def from_parts(cls, universe: Universe, pos: Iterable = (), neg: Iterable = ()) -> "PartialSet":
        return cls(universe, universe.mask_of(pos), universe.mask_of(neg))

    @classmethod
    def top(cls, universe: Universe) -> "PartialSet":
        return cls(universe, universe.full_mask, 0)

    @classmethod
    def bottom(cls, universe: Universe) -> "PartialSet":
        return cls(universe, 0, universe.full_mask)

    @classmethod
    def neutral(cls, universe: Universe) -> "PartialSet":
        return cls(universe, 0, 0)

    @property
    def pos(self) -> frozenset:
        return frozenset(self.universe.atoms_of(self.pos_bits))

    @property
    def neg(self) -> frozenset:
        return frozenset(self.universe.atoms_of(self.neg_bits))

    def _check_universe(self, other: "PartialSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError("operands live on different universes")

    def meet(self, other: "PartialSet") -> "PartialSet":
        self._check_universe(other)
        return PartialSet(self.universe, self.pos_bits & other.pos_bits, self.neg_bits | other.neg_bits)

    def join(self, other: "PartialSet") -> "PartialSet":
        self._check_universe(other)
        return PartialSet(self.universe, self.pos_bits | other.pos_bits, self.neg_bits & other.neg_bits)

    def negate(self) -> "PartialSet":
        return PartialSet(self.universe, self.neg_bits, self.pos_bits)

    def leq(self, other: "PartialSet") -> bool:
        self._check_universe(other)
        return (self.pos_bits & other.pos_bits) == self.pos_bits and (
            other.neg_bits & self.neg_bits
        ) == other.neg_bits

    def is_boolean(self) -> bool:
        """True when pos and neg partition the whole universe."""
        return (self.pos_bits | self.neg_bits) == self.universe.full_mask

    def __repr__(self) -> str:
        pos = ", ".join(sorted(map(repr, self.pos)))
        neg = ", ".join(sorted(map(repr, self.neg)))
        return f"PartialSet(pos={{{pos}}}, neg={{{neg}}})"


def generated_subalgebra(
    generators: Iterable[PartialSet], universe: Universe | None = None
) -> set[PartialSet]:
    """Smallest set containing the generators and the three constants,
    closed under meet, join and negate.

    Computed as a worklist fixpoint; terminates because there are only
    3^|S| partial sets on a finite universe.
    """
    gens = list(generators)
    if universe is None:
        if not gens:
            raise ValueError("universe required when there are no generators")
        universe = gens[0].universe
    for g in gens:
        if g.universe != universe:
            raise UniverseMismatchError("generators live on different universes")

    elements: set[PartialSet] = {
        PartialSet.top(universe),
        PartialSet.bottom(universe),
        PartialSet.neutral(universe),
        *gens,
    }
    frontier = list(elements)
    while frontier:
        x = frontier.pop()
        candidates = [x.negate()]
        # Every pair is eventually combined: (a, b) is tried when the
        # later of the two leaves the frontier.
        for y in list(elements):
            candidates.append(x.meet(y))
            candidates.append(x.join(y))
        for c in candidates:
            if c not in elements:
                elements.add(c)
                frontier.append(c)
    return elements

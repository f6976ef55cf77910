import fractions
from typing import Tuple

import msgspec

Pair = Tuple[int, int]


class Rational(msgspec.Struct, frozen=True):
    """An exact rational with a decimal convenience value."""

    num: int
    den: int
    value: float

    @classmethod
    def from_fraction(cls, fraction: fractions.Fraction) -> "Rational":
        """Build from a fraction."""
        return cls(fraction.numerator, fraction.denominator, float(fraction))

    def to_fraction(self) -> fractions.Fraction:
        """Return the exact value."""
        return fractions.Fraction(self.num, self.den)


class Section(msgspec.Struct, frozen=True):
    """The subgraph induced by the clockwise boundary segment from r to s."""

    r: int
    s: int
    internal: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Return all vertices of the segment in clockwise order."""
        return (self.r, *self.internal, self.s)

    def contains(self, other: "Section") -> bool:
        """Return True if `other` lies inside this section."""
        return set(other.vertices) <= set(self.vertices)


class ConsecutivePair(msgspec.Struct, frozen=True):
    """Two cyclically consecutive degree-2 vertices."""

    r: int
    s: int
    gap: int

    @property
    def essential(self) -> bool:
        """Return True if the clockwise segment has at least three edges."""
        return self.gap >= 3  # noqa: PLR2004

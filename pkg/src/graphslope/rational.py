"""Reduced rationals and finite slope sets.

Slopes are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  The meridional slope is not a
rational number, so :class:`SlopeSet` carries it as a separate flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

MERIDIAN = "inf"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a slope")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class SlopeSet:
    """A finite set of slopes in Q, optionally together with the meridian."""

    elements: frozenset = frozenset()
    includes_meridian: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(as_fraction(e) for e in self.elements))

    @classmethod
    def of(cls, *values, meridian: bool = False) -> "SlopeSet":
        return cls(frozenset(values), meridian)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements) + int(self.includes_meridian)

    def __contains__(self, item):
        if item == MERIDIAN:
            return self.includes_meridian
        return as_fraction(item) in self.elements

    def __neg__(self) -> "SlopeSet":
        # -inf and inf are the same slope
        return SlopeSet(frozenset(-e for e in self.elements), self.includes_meridian)

    def __or__(self, other: "SlopeSet") -> "SlopeSet":
        return SlopeSet(self.elements | other.elements,
                        self.includes_meridian or other.includes_meridian)

    def issubset(self, other: "SlopeSet") -> bool:
        if self.includes_meridian and not other.includes_meridian:
            return False
        return self.elements <= other.elements

    __le__ = issubset

    def finite(self) -> list[Fraction]:
        return sorted(self.elements)

    def map(self, fn: Callable[[Fraction], Fraction]) -> "SlopeSet":
        """Apply ``fn`` to the finite slopes; the meridian flag is dropped."""
        return SlopeSet(frozenset(fn(e) for e in self.elements))

    def with_meridian(self, flag: bool = True) -> "SlopeSet":
        return SlopeSet(self.elements, flag)

    def to_json(self) -> list[str]:
        out = [format_fraction(e) for e in self.finite()]
        if self.includes_meridian:
            out.append(MERIDIAN)
        return out

    @classmethod
    def from_json(cls, items: Iterable[str]) -> "SlopeSet":
        items = list(items)
        return cls(frozenset(as_fraction(i) for i in items if i != MERIDIAN),
                   MERIDIAN in items)

    def __str__(self):
        return "{" + ", ".join(self.to_json()) + "}"


def sumset(a: SlopeSet, b: SlopeSet, add: Callable[[Fraction, Fraction], Fraction]) -> SlopeSet:
    """All pairwise sums of finite elements, combined with ``add``."""
    return SlopeSet(frozenset(add(x, y) for x in a.elements for y in b.elements))

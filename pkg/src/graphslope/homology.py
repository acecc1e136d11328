"""Homology arithmetic behind the sum and cable boundary-slope rules.

Classes on a boundary torus are written in the meridian-longitude basis;
a class ``m[mu] + l[lambda]`` has slope ``m/l``.  Orientations follow one
global convention: the longitude coefficient of a boundary class is made
positive before reading off its slope, so every slope agrees with the
reduced-fraction convention used by :class:`~graphslope.rational.SlopeSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class TorusClass:
    mu: int
    lam: int

    def slope(self) -> Fraction:
        if self.lam == 0:
            if self.mu == 0:
                raise ValueError("the zero class has no slope")
            raise ValueError("meridional class: slope is infinite")
        return Fraction(self.mu, self.lam)

    def components(self) -> int:
        """Number of parallel simple closed curves realizing the class."""
        return gcd(self.mu, self.lam)

    def __add__(self, other: "TorusClass") -> "TorusClass":
        return TorusClass(self.mu + other.mu, self.lam + other.lam)

    def __rmul__(self, k: int) -> "TorusClass":
        return TorusClass(k * self.mu, k * self.lam)


@dataclass(frozen=True)
class CableSpaceClass:
    """``d_copies [D] + a_copies [A]`` in the relative second homology of the
    cable space; D is the q-punctured meridian disk and A the cabling annulus."""

    d_copies: int
    a_copies: int


@dataclass(frozen=True)
class CableSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.q <= 1 or gcd(self.p, self.q) != 1:
            raise ValueError(f"cable space needs q > 1 and gcd(p, q) = 1, got ({self.p}, {self.q})")

    # boundary of D and A on the outer torus (basis mu_V, lambda_V) and on
    # the inner torus around the pattern knot (basis mu, lambda)
    def disk_outer(self) -> TorusClass:
        return TorusClass(1, 0)

    def disk_inner(self) -> TorusClass:
        return TorusClass(-self.q, 0)

    def annulus_outer(self) -> TorusClass:
        return TorusClass(self.p, self.q)

    def annulus_inner(self) -> TorusClass:
        return TorusClass(-self.p * self.q, -1)

    def boundary(self, s: CableSpaceClass) -> tuple[TorusClass, TorusClass]:
        outer = s.d_copies * self.disk_outer() + s.a_copies * self.annulus_outer()
        inner = s.d_copies * self.disk_inner() + s.a_copies * self.annulus_inner()
        return outer, inner

    def surface_class(self, a: int, b: int) -> CableSpaceClass:
        """Class whose outer boundary has slope a/b."""
        return CableSpaceClass(a * self.q - b * self.p, b)

    def inner_from_outer(self, outer: TorusClass) -> TorusClass:
        """Inner boundary class determined by an outer one.

        In the first homology of the cable space mu_V = q mu and
        lambda = q lambda_V, and the two boundary classes of a surface sum
        to zero there.
        """
        if outer.lam % self.q:
            raise ValueError("outer longitude coefficient must be a multiple of q")
        return TorusClass(-outer.mu * self.q, -(outer.lam // self.q))


def _oriented_slope(c: TorusClass) -> Fraction:
    if c.lam < 0:
        c = TorusClass(-c.mu, -c.lam)
    return c.slope()


def cable_boundary_slopes(a: int, b: int, p: int, q: int) -> tuple[Fraction, Fraction]:
    """Outer and inner boundary slopes of the cable-space surface of class
    ``(aq - bp)[D] + b[A]``: ``a/b`` and ``a q^2 / b``."""
    if a == 0 and b == 0:
        raise ValueError("degenerate class")
    if b <= 0 or gcd(a, b) != 1:
        raise ValueError(f"a/b must be reduced with b > 0, got {a}/{b}")
    space = CableSpace(p, q)
    outer, inner = space.boundary(space.surface_class(a, b))
    return _oriented_slope(outer), _oriented_slope(inner)


@dataclass(frozen=True)
class GluedBoundary:
    total: TorusClass
    component_slope: Fraction
    component_count: int


def glued_boundary_class(m1: int, p1: int, q1: int, m2: int, p2: int, q2: int) -> GluedBoundary:
    """Boundary of the surface glued from ``m2 q2`` copies of a slope-p1/q1
    surface with ``m1`` boundary curves and ``m1 q1`` copies of a slope-p2/q2
    surface with ``m2`` boundary curves.

    The pairs (p_i, q_i) need not be reduced: the count of boundary curves
    comes from the total class either way.
    """
    if min(m1, m2, q1, q2) <= 0:
        raise ValueError("multiplicities and denominators must be positive")
    # algebraic intersections with the meridian and the longitude
    meets_mu = m2 * q2 * (m1 * q1)
    meets_lambda = m2 * q2 * (m1 * p1) + m1 * q1 * (m2 * p2)
    total = TorusClass(meets_lambda, meets_mu)
    return GluedBoundary(total, total.slope(), total.components())

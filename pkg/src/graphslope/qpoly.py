"""Quadratic quasi-polynomials with periodic rational coefficients.

A :class:`QuasiPoly` represents ``f(n) = c2(n) n^2 + c1(n) n + c0(n)``
where each coefficient is a periodic function of ``n`` stored as one
value per residue class: ``ci(n) = ci[n % period]``.  Index 0 is the
class of even ``n`` when the period is 2.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .rational import SlopeSet, as_fraction


class QuasiPoly:
    __slots__ = ("period", "c2", "c1", "c0")

    def __init__(self, c2: Sequence, c1: Sequence, c0: Sequence):
        c2, c1, c0 = (tuple(as_fraction(v) for v in c) for c in (c2, c1, c0))
        if not c2 or not len(c2) == len(c1) == len(c0):
            raise ValueError("coefficient arrays must be nonempty and of equal length")
        self.period = len(c2)
        self.c2, self.c1, self.c0 = c2, c1, c0

    @classmethod
    def constant(cls, c2=0, c1=0, c0=0) -> "QuasiPoly":
        return cls([c2], [c1], [c0])

    @classmethod
    def zero(cls) -> "QuasiPoly":
        return cls.constant()

    def coefficients(self, n: int) -> tuple[Fraction, Fraction, Fraction]:
        r = n % self.period
        return self.c2[r], self.c1[r], self.c0[r]

    def __call__(self, n: int) -> Fraction:
        a, b, c = self.coefficients(n)
        return a * n * n + b * n + c

    def with_period(self, period: int) -> "QuasiPoly":
        """Same function, represented with a multiple of the current period."""
        if period % self.period:
            raise ValueError(f"{period} is not a multiple of {self.period}")
        reps = period // self.period
        return QuasiPoly(self.c2 * reps, self.c1 * reps, self.c0 * reps)

    def canonical(self) -> "QuasiPoly":
        """Representation with the minimal period."""
        for d in range(1, self.period + 1):
            if self.period % d:
                continue
            if all(arr[i] == arr[i % d] for arr in (self.c2, self.c1, self.c0)
                   for i in range(self.period)):
                return QuasiPoly(self.c2[:d], self.c1[:d], self.c0[:d])
        return self

    def __eq__(self, other):
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.c2, a.c1, a.c0) == (b.c2, b.c1, b.c0)

    def __hash__(self):
        a = self.canonical()
        return hash((a.c2, a.c1, a.c0))

    def __add__(self, other: "QuasiPoly") -> "QuasiPoly":
        return add(self, other)

    def __neg__(self) -> "QuasiPoly":
        return negate_reindex(self)

    def __sub__(self, other: "QuasiPoly") -> "QuasiPoly":
        return add(self, -other)

    def __repr__(self):
        def fmt(arr):
            return "[" + ", ".join(str(v) for v in arr) + "]"
        return f"QuasiPoly(c2={fmt(self.c2)}, c1={fmt(self.c1)}, c0={fmt(self.c0)})"

    def to_json(self) -> dict:
        return {"period": self.period,
                "c2": [str(v) for v in self.c2],
                "c1": [str(v) for v in self.c1],
                "c0": [str(v) for v in self.c0]}

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPoly":
        f = cls(data["c2"], data["c1"], data["c0"])
        if f.period != data["period"]:
            raise ValueError("period does not match coefficient arrays")
        return f


def evaluate(f: QuasiPoly, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return f(n)


def add(f: QuasiPoly, g: QuasiPoly) -> QuasiPoly:
    period = lcm(f.period, g.period)
    f, g = f.with_period(period), g.with_period(period)
    return QuasiPoly([a + b for a, b in zip(f.c2, g.c2)],
                     [a + b for a, b in zip(f.c1, g.c1)],
                     [a + b for a, b in zip(f.c0, g.c0)]).canonical()


def negate_reindex(f: QuasiPoly) -> QuasiPoly:
    """Pointwise negation; maps the minimal degree of a knot to the maximal
    degree of its mirror image."""
    return QuasiPoly([-v for v in f.c2], [-v for v in f.c1], [-v for v in f.c0]).canonical()


def leading_set(f: QuasiPoly) -> SlopeSet:
    """Four times the values taken by the quadratic coefficient."""
    return SlopeSet(frozenset(4 * v for v in f.c2))


def torus_delta(p: int, q: int) -> tuple[QuasiPoly, QuasiPoly]:
    """Maximal and minimal colored Jones degree of the positive torus knot T(p, q)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"torus_delta needs coprime p, q >= 2, got ({p}, {q})")
    pq = p * q
    base = -Fraction(pq - 2, 4)
    # (1 + (-1)^n) is 2 on even n (index 0) and 0 on odd n
    even_shift = Fraction((p - 2) * (q - 2), 4)
    top = QuasiPoly([Fraction(pq, 4)] * 2, [Fraction(-1, 2)] * 2,
                    [base - even_shift, base]).canonical()
    g = Fraction((p - 1) * (q - 1), 2)
    bottom = QuasiPoly.constant(0, g, -g)
    return top, bottom


class FitError(ValueError):
    pass


def _solve3(rows: list[tuple[int, Fraction]]) -> tuple[Fraction, Fraction, Fraction]:
    """Quadratic through three points (n, y), by divided differences."""
    (x0, y0), (x1, y1), (x2, y2) = rows
    d01 = (y1 - y0) / (x1 - x0)
    d12 = (y2 - y1) / (x2 - x1)
    a = (d12 - d01) / (x2 - x0)
    b = d01 - a * (x0 + x1)
    c = y0 - a * x0 * x0 - b * x0
    return a, b, c


def fit_from_samples(samples: Iterable[tuple[int, object]], period: int) -> QuasiPoly:
    """Recover the quasi-polynomial of the given period through exact samples.

    Each residue class needs at least three distinct ``n``; the first three
    determine the coefficients and every further sample must agree exactly.
    """
    if period < 1:
        raise ValueError("period must be positive")
    classes: dict[int, dict[int, Fraction]] = {r: {} for r in range(period)}
    for n, y in samples:
        y = as_fraction(y)
        seen = classes[n % period]
        if n in seen and seen[n] != y:
            raise FitError(f"conflicting samples at n={n}")
        seen[n] = y
    c2, c1, c0 = [], [], []
    for r in range(period):
        pts = sorted(classes[r].items())
        if len(pts) < 3:
            raise FitError(f"underdetermined: residue class {r} mod {period} "
                           f"has {len(pts)} sample(s), need 3")
        a, b, c = _solve3(pts[:3])
        for n, y in pts[3:]:
            if a * n * n + b * n + c != y:
                raise FitError(f"inconsistent sample at n={n}: fit gives "
                               f"{a * n * n + b * n + c}, sample is {y}")
        c2.append(a)
        c1.append(b)
        c0.append(c)
    return QuasiPoly(c2, c1, c0).canonical()

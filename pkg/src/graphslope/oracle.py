"""Colored Jones polynomials of torus knots and their connected sums.

This is an independent check on the degree quasi-polynomials used by
:mod:`graphslope.slopes`: polynomials are computed from a closed-form
sum over the color and only their extreme degrees are compared.

Normalization: ``J_{K,1} = 1``, ``J_{U,n} = 1`` and ``J_{K,2}`` is the
ordinary Jones polynomial, with the right-handed trefoil giving
``q + q^3 - q^4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .knots import KnotExpr, Torus, Unknot, is_cable_free, leaves, normalize_mirrors, render
from .laurent import LaurentPoly
from .qpoly import FitError, QuasiPoly, fit_from_samples, torus_delta

# the sum is written in x = q**(1/4) so every exponent is an integer
_QUARTER = 4


class CalibrationError(ArithmeticError):
    pass


def _morton_sum(p: int, q: int, n: int) -> LaurentPoly:
    """Closed form over the color for T(p, q), in the variable x = q^(1/4).

    Sum over k in {-(n-1)/2, ..., (n-1)/2} of
    q^(pq k^2 - (p+q) k + 1/2) - q^(pq k^2 - (p-q) k - 1/2),
    times q^(pq (1 - n^2) / 4), divided by q^(n/2) - q^(-n/2).
    """
    terms = []
    for j in range(n):
        # k = j - (n-1)/2; work with 2k to stay integral
        k2 = 2 * j - (n - 1)
        # 4 * exponent, with k = k2/2
        e1 = p * q * k2 * k2 - 2 * (p + q) * k2 + 2
        e2 = p * q * k2 * k2 - 2 * (p - q) * k2 - 2
        terms.append((e1, 1))
        terms.append((e2, -1))
    num = LaurentPoly(terms).shift(p * q * (1 - n * n))
    den = LaurentPoly({2 * n: 1, -2 * n: -1})
    return num.exact_div(den)


@lru_cache(maxsize=None)
def colored_jones_torus(p: int, q: int, n: int) -> LaurentPoly:
    """Normalized n-colored Jones polynomial of the positive torus knot T(p, q)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"need coprime p, q >= 2, got ({p}, {q})")
    if n < 1:
        raise ValueError("color must be positive")
    raw = _morton_sum(p, q, n)
    try:
        poly = raw.rescale(_QUARTER)
    except ValueError:
        degs = sorted(Fraction(e, _QUARTER) for e in raw.terms)
        raise CalibrationError(f"T({p},{q}) n={n}: fractional degrees {degs[0]}..{degs[-1]}")
    # the closed form above is in the mirror convention
    return poly.invert()


def classical_jones_torus(p: int, q: int) -> LaurentPoly:
    """t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)."""
    num = LaurentPoly({0: 1, p + 1: -1, q + 1: -1, p + q: 1})
    return num.exact_div(LaurentPoly({0: 1, 2: -1})).shift((p - 1) * (q - 1) // 2)


def calibrate(p: int, q: int, colors: int = 10) -> None:
    """Raise CalibrationError unless the oracle meets its anchors for T(p, q)."""
    if colored_jones_torus(p, q, 1) != LaurentPoly.one():
        raise CalibrationError(f"T({p},{q}) n=1 is not 1")
    if colored_jones_torus(p, q, 2) != classical_jones_torus(p, q):
        raise CalibrationError(f"T({p},{q}) n=2 differs from the classical Jones polynomial")
    top, bottom = torus_delta(p, q)
    for n in range(1, colors + 1):
        J = colored_jones_torus(p, q, n)
        if (J.max_deg(), J.min_deg()) != (top(n), bottom(n)):
            raise CalibrationError(
                f"T({p},{q}) n={n}: degrees ({J.max_deg()}, {J.min_deg()}) "
                f"vs formula ({top(n)}, {bottom(n)})")


def leaf_polynomial(leaf: KnotExpr, n: int) -> LaurentPoly:
    if isinstance(leaf, Unknot):
        return LaurentPoly.one()
    if isinstance(leaf, Torus):
        J = colored_jones_torus(abs(leaf.p), leaf.q, n)
        return J.invert() if leaf.p < 0 else J
    raise ValueError(f"{render(leaf)} is not a torus knot or the unknot")


def expression_polynomial(k: KnotExpr, n: int) -> LaurentPoly:
    """Colored Jones polynomial of a cable-free expression."""
    if not is_cable_free(k):
        raise ValueError(f"{render(k)} contains a cable; the oracle covers sums of torus knots only")
    J = LaurentPoly.one()
    for leaf in leaves(normalize_mirrors(k)):
        J = J * leaf_polynomial(leaf, n)
    return J


def degrees_of_expression(k: KnotExpr, n: int) -> tuple[int, int]:
    """(maximal, minimal) degree of the n-colored Jones polynomial."""
    J = expression_polynomial(k, n)
    return J.max_deg(), J.min_deg()


@dataclass
class CrossValidation:
    expression: str
    max_color: int
    samples: list[tuple[int, int, int]] = field(default_factory=list)
    fitted: tuple[QuasiPoly, QuasiPoly] | None = None
    engine: tuple[QuasiPoly, QuasiPoly] | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        out = {"expression": self.expression, "max_color": self.max_color,
               "samples": [{"n": n, "max_deg": hi, "min_deg": lo} for n, hi, lo in self.samples],
               "mismatches": list(self.mismatches), "ok": self.ok}
        for key, pair in (("fitted", self.fitted), ("engine", self.engine)):
            if pair is not None:
                out[key] = {"delta": pair[0].to_json(), "delta_star": pair[1].to_json()}
        return out


def cross_validate(k: KnotExpr, max_color: int = 8) -> CrossValidation:
    """Fit period-2 quasi-polynomials to oracle degrees for n = 1..max_color
    and compare them with the engine's degree quasi-polynomials."""
    from .slopes import profile

    if max_color < 6:
        raise ValueError("max_color must be at least 6 to fit period 2")
    report = CrossValidation(render(k), max_color)
    for n in range(1, max_color + 1):
        hi, lo = degrees_of_expression(k, n)
        report.samples.append((n, hi, lo))
    try:
        top = fit_from_samples([(n, hi) for n, hi, _ in report.samples], 2)
        bottom = fit_from_samples([(n, lo) for n, _, lo in report.samples], 2)
        report.fitted = (top, bottom)
    except FitError as exc:
        report.mismatches.append(f"oracle degrees are not a period-2 quasi-polynomial: {exc}")
    prof = profile(k)
    report.engine = prof.delta
    if prof.delta is None:
        report.mismatches.append("engine has no degree quasi-polynomial for this expression")
        return report
    if report.fitted is not None:
        for name, got, want in zip(("delta", "delta*"), report.fitted, prof.delta):
            if got != want:
                report.mismatches.append(f"{name}: oracle fit {got!r} != engine {want!r}")
    for n, hi, lo in report.samples:
        if (prof.delta[0](n), prof.delta[1](n)) != (hi, lo):
            report.mismatches.append(
                f"n={n}: oracle degrees ({hi}, {lo}) != engine "
                f"({prof.delta[0](n)}, {prof.delta[1](n)})")
    return report

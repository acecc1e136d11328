"""Jones slopes, generated boundary slopes and Condition delta for graph knots.

:func:`profile` walks a graph-knot expression bottom-up.  Torus leaves
and the unknot have explicit degree quasi-polynomials; connected sums add
them; cables only carry slope sets forward, since no closed cable formula
is available here.  Jones slope sets of sums and cables are *upper* sets:
every actual Jones slope lies in them, but they may be larger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .knots import (Cable, KnotExpr, Mirror, Sum, Torus, Unknot, mirror,
                    normalize_mirrors, render, require_valid)
from .qpoly import QuasiPoly, add, leading_set, negate_reindex, torus_delta
from .rational import SlopeSet, as_fraction, sumset


class ConditionStatus(str, Enum):
    VERIFIED_DIRECT = "VerifiedDirect"
    PROPAGATED_SUM = "PropagatedBySumRule"
    PROPAGATED_CABLE = "PropagatedByCableRule"
    UNKNOWN = "Unknown"

    @property
    def holds(self) -> bool:
        return self is not ConditionStatus.UNKNOWN


class Verdict(str, Enum):
    VERIFIED = "VerifiedSupersetLevel"
    HYPOTHESIS_FAILURE = "HypothesisFailure"
    NOT_EVALUATED = "NotEvaluated"
    # not reachable for valid input; kept so a broken rule cannot pass silently
    CONTAINMENT_FAILURE = "ContainmentFailure"


def sum_slopes(a, b) -> Fraction:
    """Slope of the surface glued from slopes ``a`` and ``b`` across the
    swallow-follow annulus of a connected sum."""
    a, b = as_fraction(a), as_fraction(b)
    return Fraction(a.numerator * b.denominator + a.denominator * b.numerator,
                    a.denominator * b.denominator)


def cable_transform(a, q: int) -> Fraction:
    """Companion slope ``a/b`` seen on the ``(p, q)``-cable: ``a q^2 / b``."""
    if q <= 1:
        raise ValueError(f"cable parameter q must exceed 1, got {q}")
    a = as_fraction(a)
    return Fraction(a.numerator * q * q, a.denominator)


# -- Condition delta -------------------------------------------------------

@dataclass(frozen=True)
class ClauseReport:
    period: bool
    signs: bool
    integrality: bool
    failures: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.period and self.signs and self.integrality

    def to_json(self) -> dict:
        return {"period_at_most_2": self.period, "linear_signs": self.signs,
                "integral_slopes": self.integrality, "failures": list(self.failures)}


def check_condition_delta(delta: QuasiPoly, delta_star: QuasiPoly) -> ClauseReport:
    delta, delta_star = delta.canonical(), delta_star.canonical()
    failures = []
    period = True
    for name, f in (("delta", delta), ("delta*", delta_star)):
        if f.period > 2:
            period = False
            failures.append(f"{name} has period {f.period}")
    half = Fraction(1, 2)
    signs = True
    for r, c1 in enumerate(delta.c1):
        if c1 + half > 0:
            signs = False
            failures.append(f"delta: c1 + 1/2 = {c1 + half} > 0 on residue {r} mod {delta.period}")
    for r, c1 in enumerate(delta_star.c1):
        if c1 - half < 0:
            signs = False
            failures.append(f"delta*: c1 - 1/2 = {c1 - half} < 0 on residue {r} mod {delta_star.period}")
    integral = True
    for name, f in (("delta", delta), ("delta*", delta_star)):
        for r, c2 in enumerate(f.c2):
            if (4 * c2).denominator != 1:
                integral = False
                failures.append(f"{name}: 4*c2 = {4 * c2} not an integer on residue {r} mod {f.period}")
    return ClauseReport(period, signs, integral, tuple(failures))


# -- profiles --------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisCheck:
    node: str
    route: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"node": self.node, "route": self.route, "passed": self.passed,
                "detail": self.detail}


@dataclass(frozen=True)
class SlopeProfile:
    expression: KnotExpr
    js_upper: SlopeSet
    js_star_upper: SlopeSet
    bs_gen: SlopeSet
    delta: Optional[tuple[QuasiPoly, QuasiPoly]]
    condition_delta: ConditionStatus
    verdict: Verdict
    clauses: Optional[ClauseReport] = None
    hypothesis_checks: tuple[HypothesisCheck, ...] = ()
    detail: str = ""
    children: tuple["SlopeProfile", ...] = field(default=(), repr=False)

    @property
    def jones_slopes(self) -> SlopeSet:
        return self.js_upper | self.js_star_upper

    def nodes(self):
        """Post-order walk over this profile and all sub-profiles."""
        for c in self.children:
            yield from c.nodes()
        yield self


def _torus_profile(k: Torus) -> SlopeProfile:
    top, bottom = torus_delta(abs(k.p), k.q)
    if k.p < 0:
        top, bottom = negate_reindex(bottom), negate_reindex(top)
    clauses = check_condition_delta(top, bottom)
    status = ConditionStatus.VERIFIED_DIRECT if clauses.holds else ConditionStatus.UNKNOWN
    js, js_star = leading_set(top), leading_set(bottom)
    bs = SlopeSet.of(0, k.p * k.q)
    return SlopeProfile(k, js, js_star, bs, (top, bottom), status,
                        _containment(js | js_star, bs), clauses)


def _unknot_profile(k: Unknot) -> SlopeProfile:
    zero = QuasiPoly.zero()
    clauses = check_condition_delta(zero, zero)
    s = SlopeSet.of(0)
    # the trivial knot is its own base case: slopes are {0} by inspection,
    # while the sign clause of Condition delta fails for the zero polynomial
    status = ConditionStatus.VERIFIED_DIRECT if clauses.holds else ConditionStatus.UNKNOWN
    return SlopeProfile(k, s, s, s, (zero, zero), status, Verdict.VERIFIED, clauses,
                        detail="trivial knot")


def _containment(jones: SlopeSet, bs: SlopeSet) -> Verdict:
    return Verdict.VERIFIED if jones.issubset(bs) else Verdict.CONTAINMENT_FAILURE


def _child_failure(children) -> Optional[SlopeProfile]:
    for c in children:
        if c.verdict is not Verdict.VERIFIED:
            return c
    return None


def _sum_profile(k: Sum, meridian: bool) -> SlopeProfile:
    a, b = _profile(k.left, meridian), _profile(k.right, meridian)
    delta = None
    clauses = None
    if a.delta is not None and b.delta is not None:
        delta = (add(a.delta[0], b.delta[0]), add(a.delta[1], b.delta[1]))
        js, js_star = leading_set(delta[0]), leading_set(delta[1])
        clauses = check_condition_delta(*delta)
    else:
        js = sumset(a.js_upper, b.js_upper, sum_slopes)
        js_star = sumset(a.js_star_upper, b.js_star_upper, sum_slopes)
    bs = sumset(a.bs_gen, b.bs_gen, sum_slopes).with_meridian(meridian)

    if clauses is not None and clauses.holds:
        status = ConditionStatus.VERIFIED_DIRECT
    elif a.condition_delta.holds and b.condition_delta.holds:
        status = ConditionStatus.PROPAGATED_SUM
    else:
        status = ConditionStatus.UNKNOWN

    bad = _child_failure((a, b))
    if bad is not None:
        verdict, detail = bad.verdict, f"summand {render(bad.expression)}: {bad.verdict.value}"
    else:
        verdict, detail = _containment(js | js_star, bs), ""
    return SlopeProfile(k, js, js_star, bs, delta, status, verdict, clauses,
                        detail=detail, children=(a, b))


def cable_hypothesis(companion_js: SlopeSet, p: int, q: int) -> tuple[bool, str]:
    """Check that no value of 4*c2 of the companion equals p/q.

    The periodic coefficient takes finitely many values, so "for large n"
    means every residue class.
    """
    ratio = Fraction(p, q)
    clash = [s for s in companion_js.finite() if s == ratio]
    if clash:
        return False, f"4*c2 = {clash[0]} equals p/q = {ratio}"
    vals = ", ".join(str(s) for s in companion_js.finite())
    return True, f"4*c2 in {{{vals}}} avoids p/q = {ratio}"


@lru_cache(maxsize=None)
def _cable_js(k: Cable) -> tuple[SlopeSet, HypothesisCheck]:
    """Jones slope upper set of a cable, with the hypothesis check it relies on."""
    companion_js = _js_only(k.companion)
    ok, detail = cable_hypothesis(companion_js, k.p, k.q)
    check = HypothesisCheck(render(k), "js", ok, detail)
    js = SlopeSet.of(k.p * k.q) | companion_js.map(lambda a: cable_transform(a, k.q))
    return js, check


@lru_cache(maxsize=None)
def _js_only(k: KnotExpr) -> SlopeSet:
    if isinstance(k, Cable):
        return _cable_js(k)[0]
    return _profile(k, False).js_upper


def _cable_profile(k: Cable, meridian: bool) -> SlopeProfile:
    c = _profile(k.companion, meridian)
    js, check = _cable_js(k)
    mirrored = mirror(k)
    js_mirror, check_mirror = _cable_js(mirrored)
    check_mirror = HypothesisCheck(render(k), "js* via mirror " + render(mirrored),
                                   check_mirror.passed, check_mirror.detail)
    js_star = -js_mirror
    bs = SlopeSet.of(k.p * k.q) | c.bs_gen.map(lambda a: cable_transform(a, k.q))
    checks = (check, check_mirror)

    status = ConditionStatus.PROPAGATED_CABLE
    verdict, detail = None, ""
    if not c.condition_delta.holds:
        status = ConditionStatus.UNKNOWN
        verdict = Verdict.HYPOTHESIS_FAILURE
        detail = f"companion {render(k.companion)} lacks Condition delta"
    elif not (check.passed and check_mirror.passed):
        status = ConditionStatus.UNKNOWN
        verdict = Verdict.HYPOTHESIS_FAILURE
        detail = "; ".join(h.detail for h in checks if not h.passed)
    elif c.verdict is not Verdict.VERIFIED:
        verdict, detail = c.verdict, f"companion {render(k.companion)}: {c.verdict.value}"
    if verdict is None:
        verdict = _containment(js | js_star, bs)
    return SlopeProfile(k, js, js_star, bs, None, status, verdict, None,
                        checks, detail, (c,))


@lru_cache(maxsize=None)
def _profile(k: KnotExpr, meridian: bool) -> SlopeProfile:
    if isinstance(k, Unknot):
        return _unknot_profile(k)
    if isinstance(k, Torus):
        return _torus_profile(k)
    if isinstance(k, Sum):
        return _sum_profile(k, meridian)
    if isinstance(k, Cable):
        return _cable_profile(k, meridian)
    if isinstance(k, Mirror):
        raise ValueError("expression must be mirror-normalized")
    raise TypeError(f"not a knot expression: {k!r}")


def profile(k: KnotExpr, include_meridian: bool = False) -> SlopeProfile:
    """Slope profile of a valid expression (mirrors are normalized first)."""
    require_valid(k)
    return _profile(normalize_mirrors(k), include_meridian)


# -- conjecture reports ----------------------------------------------------

@dataclass(frozen=True)
class Membership:
    slope: Fraction
    source: str
    matched_bs: Optional[Fraction]

    def to_json(self) -> dict:
        return {"slope": str(self.slope), "source": self.source,
                "matched_bs": None if self.matched_bs is None else str(self.matched_bs)}


@dataclass(frozen=True)
class ConjectureReport:
    profile: SlopeProfile
    membership_table: tuple[Membership, ...]
    condition_trail: tuple[tuple[str, ConditionStatus], ...]
    hypothesis_trail: tuple[HypothesisCheck, ...]

    @property
    def verdict(self) -> Verdict:
        return self.profile.verdict


def verify_conjecture(k: KnotExpr, include_meridian: bool = False) -> ConjectureReport:
    prof = profile(k, include_meridian)
    table = []
    for source, slopes in (("js", prof.js_upper), ("js*", prof.js_star_upper)):
        for s in slopes:
            table.append(Membership(s, source, s if s in prof.bs_gen else None))
    trail = tuple((render(node.expression), node.condition_delta) for node in prof.nodes())
    checks = tuple(h for node in prof.nodes() for h in node.hypothesis_checks)
    return ConjectureReport(prof, tuple(table), trail, checks)

"""JSON and text renderings of profiles, verdicts and derivation traces."""

from __future__ import annotations

from fractions import Fraction

from .homology import cable_boundary_slopes, glued_boundary_class
from .knots import Cable, KnotExpr, Sum, Torus, Unknot, render
from .slopes import ConjectureReport, SlopeProfile, verify_conjecture


def profile_json(prof: SlopeProfile, source: KnotExpr | None = None) -> dict:
    out = {
        "expression": render(source if source is not None else prof.expression),
        "normalized": render(prof.expression),
        "js_upper": prof.js_upper.to_json(),
        "js_star_upper": prof.js_star_upper.to_json(),
        "bs_gen": prof.bs_gen.to_json(),
    }
    if prof.delta is not None:
        out["delta"] = prof.delta[0].to_json()
        out["delta_star"] = prof.delta[1].to_json()
    cond = {"status": prof.condition_delta.value}
    if prof.clauses is not None:
        cond["clauses"] = prof.clauses.to_json()
    out["condition_delta"] = cond
    out["hypothesis_checks"] = [h.to_json() for node in prof.nodes() for h in node.hypothesis_checks]
    out["verdict"] = prof.verdict.value
    if prof.detail:
        out["verdict_detail"] = prof.detail
    return out


def conjecture_json(report: ConjectureReport, source: KnotExpr | None = None) -> dict:
    out = profile_json(report.profile, source)
    out["membership_table"] = [m.to_json() for m in report.membership_table]
    out["condition_trail"] = [{"node": node, "status": status.value}
                              for node, status in report.condition_trail]
    return out


def profile_text(prof: SlopeProfile, source: KnotExpr | None = None) -> str:
    lines = [f"expression     {render(source if source is not None else prof.expression)}"]
    if source is not None and source != prof.expression:
        lines.append(f"normalized     {render(prof.expression)}")
    lines += [
        f"js (upper)     {prof.js_upper}",
        f"js* (upper)    {prof.js_star_upper}",
        f"bs generated   {prof.bs_gen}",
    ]
    if prof.delta is not None:
        lines.append(f"delta          {prof.delta[0]!r}")
        lines.append(f"delta*         {prof.delta[1]!r}")
    lines.append(f"Condition δ    {prof.condition_delta.value}")
    if prof.clauses is not None and prof.clauses.failures:
        lines += [f"  clause fails: {f}" for f in prof.clauses.failures]
    verdict = prof.verdict.value + (f" ({prof.detail})" if prof.detail else "")
    lines.append(f"verdict        {verdict}")
    return "\n".join(lines)


def conjecture_text(report: ConjectureReport, source: KnotExpr | None = None) -> str:
    lines = [profile_text(report.profile, source), "membership"]
    for m in report.membership_table:
        hit = "MISSING" if m.matched_bs is None else str(m.matched_bs)
        lines.append(f"  {m.source:4} {str(m.slope):>8} -> {hit}")
    if report.hypothesis_trail:
        lines.append("hypothesis checks")
        for h in report.hypothesis_trail:
            lines.append(f"  [{'ok' if h.passed else 'FAIL'}] {h.node} ({h.route}): {h.detail}")
    return "\n".join(lines)


def _multiplicity(slope: Fraction) -> int:
    # a surface with nonzero boundary slope has an even number of boundary curves
    return 2 if slope.numerator else 1


def explain(k: KnotExpr, include_meridian: bool = False) -> list[dict]:
    """Per-node derivation trace, children before parents."""
    report = verify_conjecture(k, include_meridian)
    steps = []
    for node in report.profile.nodes():
        expr = node.expression
        step = {"node": render(expr), "condition_delta": node.condition_delta.value,
                "verdict": node.verdict.value}
        if isinstance(expr, Unknot):
            step["rule"] = "trivial knot: all slope sets are {0}"
        elif isinstance(expr, Torus):
            step["rule"] = "torus knot: explicit degree quasi-polynomials" + (
                " (mirror of the positive knot)" if expr.p < 0 else "")
            step["delta"] = node.delta[0].to_json()
            step["delta_star"] = node.delta[1].to_json()
            step["bs_seed"] = node.bs_gen.to_json()
        elif isinstance(expr, Sum):
            left, right = node.children
            step["rule"] = "connected sum: slopes add"
            glue = []
            for a in left.bs_gen.finite():
                for b in right.bs_gen.finite():
                    m1, m2 = _multiplicity(a), _multiplicity(b)
                    g = glued_boundary_class(m1, a.numerator, a.denominator,
                                             m2, b.numerator, b.denominator)
                    glue.append({"slopes": [str(a), str(b)], "multiplicities": [m1, m2],
                                 "total_class": [g.total.mu, g.total.lam],
                                 "component_slope": str(g.component_slope),
                                 "component_count": g.component_count})
            step["glued_surfaces"] = glue
        elif isinstance(expr, Cable):
            (companion,) = node.children
            step["rule"] = f"cable: annulus slope pq = {expr.p * expr.q}, companion slopes scale by q^2"
            rows = []
            for a in companion.bs_gen.finite():
                outer, inner = cable_boundary_slopes(a.numerator, a.denominator, expr.p, expr.q)
                rows.append({"companion_slope": str(a),
                             "class": [a.numerator * expr.q - a.denominator * expr.p, a.denominator],
                             "outer_slope": str(outer), "inner_slope": str(inner)})
            step["cable_space_surfaces"] = rows
            step["hypothesis_checks"] = [h.to_json() for h in node.hypothesis_checks]
        step["js_upper"] = node.js_upper.to_json()
        step["js_star_upper"] = node.js_star_upper.to_json()
        step["bs_gen"] = node.bs_gen.to_json()
        steps.append(step)
    return steps


def explain_text(steps: list[dict]) -> str:
    lines = []
    for i, step in enumerate(steps, 1):
        lines.append(f"[{i}] {step['node']}")
        lines.append(f"    {step['rule']}")
        for g in step.get("glued_surfaces", []):
            a, b = g["slopes"]
            mu, lam = g["total_class"]
            lines.append(f"    {a} + {b}: class {mu}[mu] + {lam}[lambda] -> "
                         f"{g['component_count']} curve(s) of slope {g['component_slope']}")
        for r in step.get("cable_space_surfaces", []):
            d, a = r["class"]
            lines.append(f"    {d}[D] + {a}[A]: outer {r['outer_slope']}, inner {r['inner_slope']}")
        for h in step.get("hypothesis_checks", []):
            lines.append(f"    [{'ok' if h['passed'] else 'FAIL'}] {h['route']}: {h['detail']}")
        lines.append(f"    js {_fmt(step['js_upper'])}  js* {_fmt(step['js_star_upper'])}  "
                     f"bs {_fmt(step['bs_gen'])}  Condition δ {step['condition_delta']}  "
                     f"{step['verdict']}")
    return "\n".join(lines)


def _fmt(items) -> str:
    return "{" + ", ".join(items) + "}"

"""Command-line interface.

Exit status: 0 when everything verified, 1 for unparsable or invalid
input, 2 when a hypothesis check or an oracle comparison fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .generate import random_batch
from .knots import KnotExpr, ParseError, ValidationError, is_cable_free, parse, render, validate
from .oracle import cross_validate
from .report import conjecture_json, conjecture_text, explain, explain_text, profile_json, profile_text
from .slopes import Verdict, profile, verify_conjecture

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2
COMMANDS = ("analyze", "verify", "oracle-check", "batch", "explain")


class OutOfScope(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    expressions: list[str] = field(default_factory=list)
    max_color: int = 8
    include_meridian: bool = False
    output: str = "text"
    seed: int = 0
    depth: int = 4
    count: int = 200
    max_p: int = 50
    max_q: int = 7

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command == "oracle-check" and self.max_color < 6:
            raise ValueError("--max-color must be at least 6 for oracle fitting")


def read_expressions(lines: Iterable[str]) -> list[str]:
    """Non-blank lines, skipping comment lines that start with '#'."""
    out = []
    for line in lines:
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


def _load(text: str) -> KnotExpr:
    k = parse(text)
    violations = validate(k)
    if violations:
        raise ValidationError(violations)
    return k


def _single(config: RunConfig, text: str) -> tuple[int, object]:
    k = _load(text)
    as_json = config.output == "json"
    if config.command == "analyze":
        prof = profile(k, config.include_meridian)
        status = EXIT_OK if prof.verdict is Verdict.VERIFIED else EXIT_MATH
        return status, profile_json(prof, k) if as_json else profile_text(prof, k)
    if config.command == "verify":
        rep = verify_conjecture(k, config.include_meridian)
        status = EXIT_OK if rep.verdict is Verdict.VERIFIED else EXIT_MATH
        return status, conjecture_json(rep, k) if as_json else conjecture_text(rep, k)
    if config.command == "explain":
        steps = explain(k, config.include_meridian)
        status = EXIT_OK if steps[-1]["verdict"] == Verdict.VERIFIED.value else EXIT_MATH
        if as_json:
            return status, {"expression": render(k), "steps": steps}
        return status, explain_text(steps)
    if config.command == "oracle-check":
        if not is_cable_free(k):
            raise OutOfScope(f"{render(k)} contains a cable; oracle-check covers sums of torus knots")
        rep = cross_validate(k, config.max_color)
        status = EXIT_OK if rep.ok else EXIT_MATH
        if as_json:
            return status, rep.to_json()
        lines = [f"expression {rep.expression}"]
        for n, hi, lo in rep.samples:
            lines.append(f"  n={n:<3} max {hi:<6} min {lo}")
        if rep.fitted is not None:
            lines.append(f"fitted delta  {rep.fitted[0]!r}")
            lines.append(f"fitted delta* {rep.fitted[1]!r}")
        lines += [f"MISMATCH {m}" for m in rep.mismatches] or ["all degrees match"]
        return status, "\n".join(lines)
    raise AssertionError(config.command)


def _batch(config: RunConfig) -> tuple[int, object]:
    exprs = random_batch(config.seed, config.count, config.depth, config.max_p, config.max_q)
    rows = []
    counts: dict[str, int] = {}
    for i, k in enumerate(exprs):
        prof = profile(k, config.include_meridian)
        counts[prof.verdict.value] = counts.get(prof.verdict.value, 0) + 1
        rows.append({"index": i, "expression": render(k), "verdict": prof.verdict.value,
                     "detail": prof.detail})
    status = EXIT_OK if all(r["verdict"] == Verdict.VERIFIED.value for r in rows) else EXIT_MATH
    summary = {"seed": config.seed, "count": config.count, "depth": config.depth,
               "bounds": [config.max_p, config.max_q], "verdicts": counts, "results": rows}
    if config.output == "json":
        return status, summary
    lines = [f"{r['index']:>4}  {r['verdict']:<22} {r['expression']}" for r in rows]
    lines.append("summary: " + ", ".join(f"{v} {n}" for v, n in sorted(counts.items())))
    return status, "\n".join(lines)


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if config.command == "batch":
        status, payload = _batch(config)
        _emit(payload, config, out)
        return status
    worst = EXIT_OK
    payloads = []
    for text in config.expressions:
        try:
            status, payload = _single(config, text)
        except ParseError as exc:
            err.write(f"error: {text!r}: parse error: {exc}\n")
            status, payload = EXIT_INPUT, {"expression": text, "error": str(exc)}
        except (ValidationError, OutOfScope) as exc:
            err.write(f"error: {text!r}: invalid: {exc}\n")
            status, payload = EXIT_INPUT, {"expression": text, "error": str(exc)}
        worst = max(worst, status)
        payloads.append(payload)
    if config.output == "json":
        _emit(payloads[0] if len(payloads) == 1 else payloads, config, out)
    else:
        out.write("\n\n".join(p for p in payloads if isinstance(p, str)) + "\n")
    return worst


def _emit(payload, config: RunConfig, out: TextIO) -> None:
    if config.output == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(payload + "\n")


def _bounds(text: str) -> tuple[int, int]:
    try:
        p, q = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected PMAX,QMAX")
    return p, q


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="graphslope",
                                 description="Jones slopes and boundary slopes of graph knots.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("expression", nargs="*", help="graph-knot expressions, e.g. 'C(13,2; T(2,3))'")
    ap.add_argument("-f", "--file", help="read expressions from a file, one per line")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--max-color", type=int, default=8, metavar="N")
    ap.add_argument("--include-meridian", action="store_true")
    ap.add_argument("--seed", type=int, default=0, metavar="S")
    ap.add_argument("--depth", type=int, default=4, metavar="D")
    ap.add_argument("--count", type=int, default=200, metavar="K")
    ap.add_argument("--bounds", type=_bounds, default=(50, 7), metavar="PMAX,QMAX")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    exprs = list(args.expression)
    if args.file:
        with open(args.file) as fh:
            exprs += read_expressions(fh)
    if args.command != "batch" and not exprs:
        print("error: no expression given", file=sys.stderr)
        return EXIT_INPUT
    try:
        config = RunConfig(args.command, exprs, args.max_color, args.include_meridian,
                           "json" if args.json else "text", args.seed, args.depth, args.count,
                           *args.bounds)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

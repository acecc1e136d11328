"""Graph-knot expressions.

A graph knot is built from unknots and torus knots by mirroring,
connected sum and cabling.  Expressions are immutable trees; the text
form is::

    expr := term ("#" term)*
    term := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"
          | "mirror(" expr ")" | "(" expr ")"

Torus knots are kept with ``q >= 2`` and the handedness in the sign of
``p``.  ``#`` associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Union


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class Torus:
    p: int
    q: int


@dataclass(frozen=True)
class Mirror:
    child: "KnotExpr"


@dataclass(frozen=True)
class Sum:
    left: "KnotExpr"
    right: "KnotExpr"


@dataclass(frozen=True)
class Cable:
    p: int
    q: int
    companion: "KnotExpr"


KnotExpr = Union[Unknot, Torus, Mirror, Sum, Cable]

U = Unknot()


@dataclass(frozen=True)
class Bounds:
    max_p: int = 10**6
    max_q: int = 10**4
    max_depth: int = 64


DEFAULT_BOUNDS = Bounds()


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class ValidationError(ValueError):
    def __init__(self, violations: list["Violation"]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


@dataclass(frozen=True)
class Violation:
    path: str
    code: str
    message: str

    def __str__(self):
        return f"{self.path}: {self.message}"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"(-\s*\d+|\d+)|(mirror|[UTC])|([(),;#])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        num, word, punct = m.groups()
        if num is not None:
            tokens.append(("int", int(re.sub(r"\s", "", num)), pos))
        else:
            tok = word or punct
            tokens.append((tok, tok, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, bounds: Bounds):
        self.tokens = _tokenize(text)
        self.i = 0
        self.bounds = bounds

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def integer(self, limit: int) -> int:
        _, value, pos = self.take("int")
        if abs(value) > limit:
            raise ParseError(f"integer {value} exceeds bound {limit}", pos)
        return value

    def expr(self, depth: int = 0) -> KnotExpr:
        if depth > self.bounds.max_depth:
            raise ParseError("expression nested too deeply", self.peek()[2])
        node = self.term(depth)
        while self.peek()[0] == "#":
            self.i += 1
            node = Sum(node, self.term(depth))
        return node

    def term(self, depth: int) -> KnotExpr:
        kind, _, pos = self.peek()
        if kind == "U":
            self.i += 1
            return U
        if kind == "T":
            self.i += 1
            self.take("(")
            p = self.integer(self.bounds.max_p)
            self.take(",")
            q = self.integer(self.bounds.max_q)
            self.take(")")
            return Torus(p, q)
        if kind == "C":
            self.i += 1
            self.take("(")
            p = self.integer(self.bounds.max_p)
            self.take(",")
            q = self.integer(self.bounds.max_q)
            self.take(";")
            inner = self.expr(depth + 1)
            self.take(")")
            return Cable(p, q, inner)
        if kind == "mirror":
            self.i += 1
            self.take("(")
            inner = self.expr(depth + 1)
            self.take(")")
            return Mirror(inner)
        if kind == "(":
            self.i += 1
            inner = self.expr(depth + 1)
            self.take(")")
            return inner
        found = "end of input" if kind == "end" else repr(self.peek()[1])
        raise ParseError(f"expected a knot term, found {found}", pos)


def parse(text: str, bounds: Bounds = DEFAULT_BOUNDS) -> KnotExpr:
    """Parse the text form of an expression.

    >>> parse("C(13,2; T(2,3))")
    Cable(p=13, q=2, companion=Torus(p=2, q=3))
    """
    parser = _Parser(text, bounds)
    node = parser.expr()
    parser.take("end")
    return node


def render(k: KnotExpr) -> str:
    """Inverse of :func:`parse`."""
    if isinstance(k, Unknot):
        return "U"
    if isinstance(k, Torus):
        return f"T({k.p},{k.q})"
    if isinstance(k, Mirror):
        return f"mirror({render(k.child)})"
    if isinstance(k, Cable):
        return f"C({k.p},{k.q}; {render(k.companion)})"
    if isinstance(k, Sum):
        right = render(k.right)
        if isinstance(k.right, Sum):
            right = f"({right})"
        return f"{render(k.left)} # {right}"
    raise TypeError(f"not a knot expression: {k!r}")


# -- validation ------------------------------------------------------------

def depth(k: KnotExpr) -> int:
    if isinstance(k, (Unknot, Torus)):
        return 1
    if isinstance(k, Mirror):
        return 1 + depth(k.child)
    if isinstance(k, Cable):
        return 1 + depth(k.companion)
    return 1 + max(depth(k.left), depth(k.right))


def _is_unknot(k: KnotExpr) -> bool:
    while isinstance(k, Mirror):
        k = k.child
    return isinstance(k, Unknot)


def validate(k: KnotExpr, bounds: Bounds = DEFAULT_BOUNDS) -> list[Violation]:
    """Return every invariant violation in ``k``; empty means valid."""
    out: list[Violation] = []
    if depth(k) > bounds.max_depth:
        out.append(Violation("$", "depth", f"depth {depth(k)} exceeds {bounds.max_depth}"))
    _check(k, "$", bounds, out)
    return out


def _check_params(p: int, q: int, path: str, bounds: Bounds, out: list) -> None:
    if abs(p) > bounds.max_p:
        out.append(Violation(path, "bound", f"|p| = {abs(p)} exceeds {bounds.max_p}"))
    if abs(q) > bounds.max_q:
        out.append(Violation(path, "bound", f"q = {q} exceeds {bounds.max_q}"))
    g = gcd(p, q)
    if g != 1:
        out.append(Violation(path, "gcd", f"gcd({p},{q}) = {g}, must be 1"))


def _check(k: KnotExpr, path: str, bounds: Bounds, out: list) -> None:
    if isinstance(k, Unknot):
        return
    if isinstance(k, Torus):
        if abs(k.p) < 2:
            out.append(Violation(path, "trivial", f"|p| >= 2 required, got p = {k.p}"))
        if k.q < 2:
            out.append(Violation(path, "q", f"q >= 2 required, got q = {k.q}"))
        _check_params(k.p, k.q, path, bounds, out)
    elif isinstance(k, Mirror):
        _check(k.child, path + ".mirror", bounds, out)
    elif isinstance(k, Sum):
        for side, child in (("left", k.left), ("right", k.right)):
            if _is_unknot(child):
                out.append(Violation(f"{path}.{side}", "unknot-summand",
                                     "connected sum with the unknot is not allowed"))
            _check(child, f"{path}.{side}", bounds, out)
    elif isinstance(k, Cable):
        if k.q <= 1:
            out.append(Violation(path, "q", f"q > 1 required, got q = {k.q}"))
        _check_params(k.p, k.q, path, bounds, out)
        if _is_unknot(k.companion):
            out.append(Violation(path, "unknot-companion", "cable companion must be a nontrivial knot"))
        _check(k.companion, path + ".companion", bounds, out)
    else:
        raise TypeError(f"not a knot expression: {k!r}")


def require_valid(k: KnotExpr, bounds: Bounds = DEFAULT_BOUNDS) -> KnotExpr:
    violations = validate(k, bounds)
    if violations:
        raise ValidationError(violations)
    return k


# -- mirrors ---------------------------------------------------------------

def mirror(k: KnotExpr) -> KnotExpr:
    """Mirror image of a mirror-free expression, pushed down to the leaves."""
    if isinstance(k, Unknot):
        return k
    if isinstance(k, Torus):
        return Torus(-k.p, k.q)
    if isinstance(k, Sum):
        return Sum(mirror(k.left), mirror(k.right))
    if isinstance(k, Cable):
        return Cable(-k.p, k.q, mirror(k.companion))
    if isinstance(k, Mirror):
        return normalize_mirrors(k.child)
    raise TypeError(f"not a knot expression: {k!r}")


def normalize_mirrors(k: KnotExpr) -> KnotExpr:
    """Eliminate every Mirror node by pushing it into torus and cable parameters."""
    if isinstance(k, (Unknot, Torus)):
        return k
    if isinstance(k, Mirror):
        return mirror(normalize_mirrors(k.child))
    if isinstance(k, Sum):
        return Sum(normalize_mirrors(k.left), normalize_mirrors(k.right))
    if isinstance(k, Cable):
        return Cable(k.p, k.q, normalize_mirrors(k.companion))
    raise TypeError(f"not a knot expression: {k!r}")


def is_cable_free(k: KnotExpr) -> bool:
    if isinstance(k, (Unknot, Torus)):
        return True
    if isinstance(k, Mirror):
        return is_cable_free(k.child)
    if isinstance(k, Sum):
        return is_cable_free(k.left) and is_cable_free(k.right)
    return False


def leaves(k: KnotExpr) -> list[KnotExpr]:
    """Torus and unknot leaves of a mirror-normalized sum, left to right."""
    if isinstance(k, Sum):
        return leaves(k.left) + leaves(k.right)
    if isinstance(k, (Unknot, Torus)):
        return [k]
    raise ValueError(f"{render(k)} is not a sum of torus knots")

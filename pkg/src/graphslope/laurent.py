"""Sparse integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so the empty mapping is the zero
    polynomial.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_deg(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def min_deg(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the monomial of degree ``k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert(self) -> "LaurentPoly":
        """Substitute the variable by its inverse."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def rescale(self, factor: int) -> "LaurentPoly":
        """Substitute ``x -> x**(1/factor)``; every exponent must be divisible."""
        if any(e % factor for e in self._terms):
            raise ValueError(f"exponents are not all divisible by {factor}")
        return LaurentPoly({e // factor: c for e, c in self._terms.items()})

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division by a divisor whose top coefficient is +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        top = divisor.max_deg()
        lead = divisor.coefficient(top)
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        if not rem:
            return LaurentPoly(), LaurentPoly()
        # lowest quotient exponent an exact division can produce
        floor = self.min_deg() - divisor.min_deg()
        while rem:
            e = max(rem)
            if e - top < floor:
                break
            c = rem[e] * lead
            quot[e - top] = c
            for de, dc in divisor._terms.items():
                k = de + e - top
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError("division leaves a nonzero remainder")
        return q

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            parts.append(f"{coef}{mono}" if mono else coef)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g

"""Seeded random graph-knot expressions."""

from __future__ import annotations

import random
from math import gcd

from .knots import U, Cable, KnotExpr, Mirror, Sum, Torus


def _coprime_p(rng: random.Random, q: int, max_p: int, min_abs: int) -> int:
    while True:
        p = rng.randint(min_abs, max_p) * rng.choice((1, -1))
        if gcd(p, q) == 1:
            return p


def random_torus(rng: random.Random, max_p: int = 50, max_q: int = 7) -> Torus:
    q = rng.randint(2, max_q)
    return Torus(_coprime_p(rng, q, max_p, 2), q)


def random_expression(rng: random.Random, depth: int = 4, max_p: int = 50,
                      max_q: int = 7, mirrors: bool = True) -> KnotExpr:
    """A valid nontrivial expression of depth at most ``depth``."""
    if depth <= 1:
        return random_torus(rng, max_p, max_q)
    kind = rng.choices(("torus", "sum", "cable", "mirror"),
                       weights=(2, 3, 3, 1 if mirrors else 0))[0]
    if kind == "torus":
        return random_torus(rng, max_p, max_q)
    if kind == "sum":
        return Sum(random_expression(rng, depth - 1, max_p, max_q, mirrors),
                   random_expression(rng, depth - 1, max_p, max_q, mirrors))
    if kind == "mirror":
        return Mirror(random_expression(rng, depth - 1, max_p, max_q, mirrors))
    q = rng.randint(2, max_q)
    return Cable(_coprime_p(rng, q, max_p, 1), q,
                 random_expression(rng, depth - 1, max_p, max_q, mirrors))


def random_batch(seed: int, count: int, depth: int = 4, max_p: int = 50,
                 max_q: int = 7, unknot_rate: float = 0.02) -> list[KnotExpr]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        if rng.random() < unknot_rate:
            out.append(U)
        else:
            out.append(random_expression(rng, depth, max_p, max_q))
    return out

from fractions import Fraction

import sympy
import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphslope.knots import U, Cable, Mirror, Sum, Torus
from graphslope.laurent import LaurentPoly, mul
from graphslope.oracle import (calibrate, classical_jones_torus, colored_jones_torus,
                               cross_validate, degrees_of_expression)
from graphslope.qpoly import add, torus_delta

from conftest import TORUS_PAIRS, cable_free

laurent = st.dictionaries(st.integers(-20, 20), st.integers(-5, 5), max_size=6).map(LaurentPoly)

t = sympy.symbols("t")


def sympy_jones(p, q):
    """Classical torus-knot Jones polynomial, expanded by sympy."""
    expr = t ** ((p - 1) * (q - 1) // 2) * (1 - t ** (p + 1) - t ** (q + 1) + t ** (p + q)) / (1 - t ** 2)
    num = sympy.Poly(sympy.cancel(expr), t)
    return LaurentPoly({m[0]: int(c) for m, c in num.terms()})


def test_laurent_normal_form():
    f = LaurentPoly([(2, 1), (2, -1), (-1, 3)])
    assert f.terms == {-1: 3}
    assert LaurentPoly().is_zero()
    with pytest.raises(ValueError):
        LaurentPoly().max_deg()


def test_mul_examples():
    f = LaurentPoly({-3: 2, 1: -1, 4: 5})
    assert mul(f, LaurentPoly.one()) == f
    assert mul(LaurentPoly({2: 1, 0: -1}), LaurentPoly({2: 1, 0: 1})) == LaurentPoly({4: 1, 0: -1})
    J = colored_jones_torus(2, 3, 2)
    assert mul(J, J).max_deg() == 8 == add(*[torus_delta(2, 3)[0]] * 2)(2)


def test_division():
    f = LaurentPoly({-2: 1, 3: -4, 5: 2})
    g = LaurentPoly({1: 1, -1: -1})
    assert (f * g).exact_div(g) == f
    q, r = LaurentPoly({3: 1, 0: 1}).divmod(LaurentPoly({1: 1, 0: -1}))
    assert q * LaurentPoly({1: 1, 0: -1}) + r == LaurentPoly({3: 1, 0: 1})
    with pytest.raises(ArithmeticError):
        LaurentPoly({3: 1, 0: 1}).exact_div(LaurentPoly({1: 1, 0: -1}))


@given(laurent, laurent)
def test_degree_additivity(f, g):
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
        return
    fg = f * g
    assert fg.max_deg() == f.max_deg() + g.max_deg()
    assert fg.min_deg() == f.min_deg() + g.min_deg()


@given(laurent)
def test_inversion_swaps_degrees(f):
    if f.is_zero():
        return
    assert (f.invert().max_deg(), f.invert().min_deg()) == (-f.min_deg(), -f.max_deg())


def test_json_dump_is_ordered():
    J = colored_jones_torus(2, 3, 2)
    assert J.to_json() == [[1, 1], [3, 1], [4, -1]]
    assert LaurentPoly.from_json(J.to_json()) == J


def test_trefoil_jones():
    J = colored_jones_torus(2, 3, 2)
    assert J == LaurentPoly({1: 1, 3: 1, 4: -1})
    assert (J.max_deg(), J.min_deg()) == (4, 1)


def test_t35_jones():
    # t^4 (1 + t^2 - t^6)
    J = colored_jones_torus(3, 5, 2)
    assert J == LaurentPoly({4: 1, 6: 1, 10: -1})
    assert (J.max_deg(), J.min_deg()) == (10, 4)


@pytest.mark.parametrize("p, q", TORUS_PAIRS + [(3, 7), (5, 6)])
def test_calibration(p, q):
    assert colored_jones_torus(p, q, 1) == LaurentPoly.one()
    assert colored_jones_torus(p, q, 2) == sympy_jones(p, q) == classical_jones_torus(p, q)
    calibrate(p, q)


def test_colored_jones_symmetric_in_p_q():
    for n in range(1, 6):
        assert colored_jones_torus(2, 5, n) == colored_jones_torus(5, 2, n)


def test_colored_jones_rejects():
    with pytest.raises(ValueError):
        colored_jones_torus(2, 4, 3)
    with pytest.raises(ValueError):
        colored_jones_torus(2, 3, 0)


def test_degrees_of_expression_examples():
    hi, _ = degrees_of_expression(Sum(Torus(2, 3), Torus(2, 5)), 3)
    assert hi == 11 + 19 == 30
    assert degrees_of_expression(Torus(-2, 3), 2) == (-1, -4)
    assert all(degrees_of_expression(U, n) == (0, 0) for n in range(1, 6))


def test_degrees_of_expression_rejects_cables():
    with pytest.raises(ValueError, match="cable"):
        degrees_of_expression(Cable(13, 2, Torus(2, 3)), 2)


@pytest.mark.parametrize("k", [Torus(2, 3), Torus(3, 5), Sum(Torus(2, 3), Torus(3, 4))])
def test_cross_validate_examples(k):
    rep = cross_validate(k, 8)
    assert rep.ok, rep.mismatches
    assert rep.fitted == rep.engine


def test_cross_validate_keeps_even_correction():
    rep = cross_validate(Torus(3, 5), 8)
    top = rep.fitted[0]
    assert top.period == 2
    assert top.c0[0] - top.c0[1] == Fraction(-3, 4)


def test_cross_validate_needs_enough_colors():
    with pytest.raises(ValueError):
        cross_validate(Torus(2, 3), 5)


@given(cable_free)
def test_cross_validate_cable_free(k):
    assert cross_validate(k, 6).ok


def test_fit_stable_with_more_samples():
    for k in (Torus(4, 5), Sum(Torus(3, 5), Mirror(Torus(2, 7)))):
        assert cross_validate(k, 8).fitted == cross_validate(k, 10).fitted

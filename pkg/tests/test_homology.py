import random
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphslope.homology import (CableSpace, TorusClass, cable_boundary_slopes,
                                 glued_boundary_class)
from graphslope.slopes import cable_transform, sum_slopes


@st.composite
def cable_tuples(draw):
    q = draw(st.integers(2, 9))
    p = draw(st.integers(-60, 60).filter(lambda p: gcd(p, q) == 1))
    b = draw(st.integers(1, 30))
    a = draw(st.integers(-200, 200).filter(lambda a: gcd(a, b) == 1))
    return a, b, p, q


def test_cable_slopes_zero():
    for p in (-5, 1, 3, 13):
        assert cable_boundary_slopes(0, 1, p, 2) == (0, 0)


def test_cable_slopes_trefoil_example():
    # class (6*2 - 13)[D] + [A] = -[D] + [A]
    space = CableSpace(13, 2)
    s = space.surface_class(6, 1)
    assert (s.d_copies, s.a_copies) == (-1, 1)
    outer, inner = space.boundary(s)
    assert outer == TorusClass(12, 2)          # aq mu_V + bq lambda_V
    assert inner == TorusClass(-24, -1)        # -aq^2 mu - b lambda
    assert cable_boundary_slopes(6, 1, 13, 2) == (6, 24)


def test_cable_slopes_reject():
    with pytest.raises(ValueError, match="degenerate"):
        cable_boundary_slopes(0, 0, 3, 2)
    with pytest.raises(ValueError):
        cable_boundary_slopes(2, 4, 3, 2)
    with pytest.raises(ValueError):
        cable_boundary_slopes(1, 1, 4, 2)


def test_random_cable_tuples_match_transform():
    rng = random.Random(7)
    done = 0
    while done < 100:
        q = rng.randint(2, 9)
        p = rng.randint(-60, 60)
        a, b = rng.randint(-200, 200), rng.randint(1, 30)
        if gcd(p, q) != 1 or gcd(a, b) != 1:
            continue
        outer, inner = cable_boundary_slopes(a, b, p, q)
        assert outer == F(a, b)
        assert inner == cable_transform(outer, q)
        done += 1


@given(cable_tuples())
def test_relations_reproduce_inner_class(t):
    a, b, p, q = t
    space = CableSpace(p, q)
    outer, inner = space.boundary(space.surface_class(a, b))
    assert space.inner_from_outer(outer) == inner


@given(cable_tuples(), st.integers(2, 6))
def test_homogeneity(t, k):
    a, b, p, q = t
    space = CableSpace(p, q)
    scaled = space.boundary(space.surface_class(k * a, k * b))
    base = space.boundary(space.surface_class(a, b))
    assert [c.slope() for c in scaled] == [c.slope() for c in base]


def test_glued_figure_parameters():
    g = glued_boundary_class(2, 0, 2, 2, 0, 1)
    assert g.total == TorusClass(0, 8)
    assert g.component_slope == 0
    assert g.component_count == 8


def test_glued_identity():
    assert glued_boundary_class(3, 5, 7, 1, 0, 1).component_slope == F(5, 7)


def test_glued_matches_displayed_formula():
    m1, p1, q1, m2, p2, q2 = 2, 3, 4, 2, -1, 6
    g = glued_boundary_class(m1, p1, q1, m2, p2, q2)
    assert g.total == TorusClass(m1 * m2 * (p1 * q2 + q1 * p2), m1 * m2 * q1 * q2)
    k = gcd(p1 * q2 + q1 * p2, q1 * q2)
    assert g.component_count == m1 * m2 * k
    assert g.component_slope == F((p1 * q2 + q1 * p2) // k, (q1 * q2) // k)


def test_random_glued_tuples_match_sum_slopes():
    rng = random.Random(11)
    done = 0
    while done < 100:
        q1, q2 = rng.randint(1, 12), rng.randint(1, 12)
        p1, p2 = rng.randint(-80, 80), rng.randint(-80, 80)
        if gcd(p1, q1) != 1 or gcd(p2, q2) != 1:
            continue
        m1, m2 = rng.randint(1, 4), rng.randint(1, 4)
        g = glued_boundary_class(m1, p1, q1, m2, p2, q2)
        assert g.component_slope == sum_slopes(F(p1, q1), F(p2, q2))
        assert g == glued_boundary_class(m1, p1, q1, m2, p2, q2)
        done += 1


@given(st.integers(1, 5), st.integers(1, 12), st.integers(-50, 50),
       st.integers(1, 5), st.integers(1, 12), st.integers(-50, 50))
def test_glued_symmetric(m1, q1, p1, m2, q2, p2):
    if gcd(p1, q1) != 1 or gcd(p2, q2) != 1:
        return
    a = glued_boundary_class(m1, p1, q1, m2, p2, q2)
    b = glued_boundary_class(m2, p2, q2, m1, p1, q1)
    assert a == b


def test_torus_class_slope_errors():
    with pytest.raises(ValueError):
        TorusClass(0, 0).slope()
    with pytest.raises(ValueError, match="meridional"):
        TorusClass(3, 0).slope()

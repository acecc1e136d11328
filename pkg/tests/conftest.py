from math import gcd

from hypothesis import strategies as st

from graphslope.knots import Cable, Mirror, Sum, Torus

TORUS_PAIRS = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)]


@st.composite
def tori(draw, max_p=30, max_q=7):
    q = draw(st.integers(2, max_q))
    p = draw(st.integers(2, max_p).filter(lambda p: gcd(p, q) == 1))
    sign = draw(st.sampled_from((1, -1)))
    return Torus(sign * p, q)


@st.composite
def cable_params(draw, max_p=30, max_q=7):
    q = draw(st.integers(2, max_q))
    p = draw(st.integers(-max_p, max_p).filter(lambda p: gcd(p, q) == 1))
    return p, q


def _extend(children):
    return st.one_of(
        st.tuples(children, children).map(lambda lr: Sum(*lr)),
        st.tuples(cable_params(), children).map(lambda pc: Cable(pc[0][0], pc[0][1], pc[1])),
        children.map(Mirror),
    )


# nontrivial valid expressions, possibly containing Mirror nodes
expressions = st.recursive(tori(), _extend, max_leaves=5)


def _extend_sums(children):
    return st.one_of(
        st.tuples(children, children).map(lambda lr: Sum(*lr)),
        children.map(Mirror),
    )


cable_free = st.recursive(tori(max_p=7, max_q=5), _extend_sums, max_leaves=3)

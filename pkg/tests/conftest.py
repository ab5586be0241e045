import math

import pytest
from hypothesis import strategies as st

from barrow import Point2, Triangle


@st.composite
def triangles(draw):
    """Non-degenerate triangles built from side lengths and an apex angle.

    Constructive rather than filtered: every draw is valid, with the area
    bounded below by a fixed fraction of the squared diameter so that
    barycentric computations stay well conditioned.
    """
    ax = draw(st.floats(-20.0, 20.0, allow_nan=False))
    ay = draw(st.floats(-20.0, 20.0, allow_nan=False))
    heading = draw(st.floats(0.0, 2.0 * math.pi, allow_nan=False))
    ab = draw(st.floats(0.1, 30.0, allow_nan=False))
    ratio = draw(st.floats(0.2, 5.0, allow_nan=False))
    apex = draw(st.floats(0.15, math.pi - 0.15, allow_nan=False))
    orient = draw(st.sampled_from([1.0, -1.0]))
    ac = ratio * ab
    return Triangle(
        Point2(ax, ay),
        Point2(ax + ab * math.cos(heading), ay + ab * math.sin(heading)),
        Point2(
            ax + ac * math.cos(heading + orient * apex),
            ay + ac * math.sin(heading + orient * apex),
        ),
    )


@st.composite
def points_in(draw, lo=-100.0, hi=100.0):
    return Point2(
        draw(st.floats(min_value=lo, max_value=hi, allow_nan=False)),
        draw(st.floats(min_value=lo, max_value=hi, allow_nan=False)),
    )


@st.composite
def interior_points(draw, t):
    """A point strictly inside ``t``, by mixing the vertices."""
    v = draw(st.floats(0.05, 0.9, allow_nan=False))
    w = draw(st.floats(0.05, 0.95 - v, allow_nan=False))
    u = 1.0 - v - w
    return Point2(
        u * t.A.x + v * t.B.x + w * t.C.x,
        u * t.A.y + v * t.B.y + w * t.C.y,
    )


@st.composite
def triangles_with_interior(draw):
    t = draw(triangles())
    return t, draw(interior_points(t))


@pytest.fixture
def unit_right():
    return Triangle(Point2(0.0, 0.0), Point2(1.0, 0.0), Point2(0.0, 1.0))


@pytest.fixture
def equilateral():
    return Triangle(Point2(0.0, 0.0), Point2(1.0, 0.0), Point2(0.5, math.sqrt(3.0) / 2.0))


@pytest.fixture
def scalene():
    return Triangle(Point2(0.0, 0.0), Point2(4.0, 0.0), Point2(1.0, 2.0))

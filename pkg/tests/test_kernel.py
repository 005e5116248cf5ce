import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fuhrmann.errors import CoincidentPoints, DegenerateAngle, NonFiniteValue, ParallelLines
from fuhrmann.kernel import (
    Circle,
    Line,
    Point,
    Vector,
    angle_at,
    distance,
    dot,
    foot,
    intersect_lines,
    line_circle_intersections,
    line_through,
    reflect,
    vector_between,
)

coord = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord)


@st.composite
def lines(draw):
    p, q = draw(points), draw(points)
    if distance(p, q) < 1e-3:
        q = Point(p.x + 1.0, p.y)
    return line_through(p, q)


def close(p, q, tol=1e-12):
    return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ((0, 0), (4, 0), (4, 0)),
        ((1, 1), (1, 1), (0, 0)),
        ((0.8, 0.4), (1, 1), (0.2, 0.6)),
    ],
)
def test_vector_between(p, q, expected):
    v = vector_between(Point(*p), Point(*q))
    assert v.dx == pytest.approx(expected[0], abs=1e-15)
    assert v.dy == pytest.approx(expected[1], abs=1e-15)


def test_dot_examples():
    assert dot(Vector(1, 0), Vector(0, 1)) == 0
    assert dot(Vector(2, 3), Vector(2, 3)) == 13
    assert dot(Vector(1, 1), Vector(-1.2, 2.4)) == pytest.approx(1.2, abs=1e-15)


def test_points_reject_non_finite():
    with pytest.raises(NonFiniteValue):
        Point(math.nan, 0)
    with pytest.raises(NonFiniteValue):
        Vector(0, math.inf)


def test_line_through_examples():
    axis = line_through(Point(0, 0), Point(1, 0))
    assert (axis.n.dx, axis.n.dy, axis.c) == (0.0, 1.0, 0.0)

    diag = line_through(Point(4, 0), Point(1, 3))
    s = 1 / math.sqrt(2)
    assert diag.n.dx == pytest.approx(s, abs=1e-15)
    assert diag.n.dy == pytest.approx(s, abs=1e-15)
    assert diag.c == pytest.approx(4 * s, abs=1e-14)

    with pytest.raises(CoincidentPoints):
        line_through(Point(1, 1), Point(1, 1))


def test_line_rejects_non_canonical_normal():
    with pytest.raises(ValueError):
        Line(Vector(-1.0, 0.0), 0.0)
    with pytest.raises(ValueError):
        Line(Vector(2.0, 0.0), 0.0)
    assert Line.from_normal(-2, 0, 4) == Line(Vector(1.0, 0.0), -2.0)


def test_reflect_examples():
    assert reflect(Point(0, -1), Line.from_normal(0, 1, -0.5)) == Point(0, 0)
    mirrored = reflect(Point(1, 1), Line.from_normal(1, 1, 4))
    assert close(mirrored, Point(3, 3), 1e-14)
    on = Point(2, 2)
    assert close(reflect(on, Line.from_normal(1, 1, 4)), on, 1e-15)


def test_intersect_lines_examples():
    x_eq_1 = Line.from_normal(1, 0, 1)
    y_eq_x = line_through(Point(0, 0), Point(2, 2))
    assert close(intersect_lines(x_eq_1, y_eq_x), Point(1, 1), 1e-15)
    with pytest.raises(ParallelLines):
        intersect_lines(Line.from_normal(0, 1, 0), Line.from_normal(0, 1, 1))
    with pytest.raises(ParallelLines):
        intersect_lines(y_eq_x, y_eq_x)


def test_foot_examples():
    assert foot(Point(1, 1), Line.from_normal(0, 1, 0)) == Point(1, 0)
    assert close(foot(Point(0, 0), Line.from_normal(1, 1, 4)), Point(2, 2), 1e-14)
    assert close(foot(Point(3, 1), Line.from_normal(1, 1, 4)), Point(3, 1), 1e-15)


def test_angle_at_examples():
    assert angle_at(Point(0, 0), Point(1, 0), Point(0, 1)) == pytest.approx(math.pi / 2, abs=1e-15)
    cos_a = 1 / math.sqrt(10)
    assert angle_at(Point(0, 0), Point(4, 0), Point(1, 3)) == pytest.approx(math.acos(cos_a), abs=1e-12)
    assert angle_at(Point(0, 0), Point(4, 0), Point(1, 3)) == pytest.approx(1.249046, abs=1e-6)
    doubled = angle_at(Point(0, 0), Point(-0.2, 1.4), Point(1, -1))
    assert doubled == pytest.approx(2 * math.acos(cos_a), abs=1e-12)
    assert doubled == pytest.approx(2.498092, abs=1e-6)
    with pytest.raises(DegenerateAngle):
        angle_at(Point(0, 0), Point(0, 0), Point(1, 0))


def test_angle_at_clamps_collinear_rays():
    # normalised dot rounds slightly past 1 here without the clamp
    assert angle_at(Point(0, 0), Point(0.1, 0.3), Point(0.2, 0.6)) == pytest.approx(0.0, abs=1e-7)


def test_line_circle_secant_matches_quadratic_oracle():
    anchor, direction = Point(2.5, 1.5), Vector(1, 1)
    line = line_through(anchor, anchor + direction)
    circle = Circle(Point(2, 1), math.sqrt(5))
    got = line_circle_intersections(line, circle)
    want = oracles.line_circle(np.array([2.5, 1.5]), np.array([1.0, 1.0]), np.array([2.0, 1.0]), math.sqrt(5))
    assert len(got) == 2
    for p, (x, y) in zip(got, want):
        assert (p.x, p.y) == pytest.approx((x, y), abs=1e-12)
    assert (got[0].x, got[0].y) == pytest.approx((0.41886, -0.58114), abs=1e-5)
    assert (got[1].x, got[1].y) == pytest.approx((3.58114, 2.58114), abs=1e-5)


def test_line_circle_tangent_and_miss():
    unit = Circle(Point(0, 0), 1.0)
    assert line_circle_intersections(Line.from_normal(0, 1, 1), unit) == [Point(0, 1)]
    assert line_circle_intersections(Line.from_normal(0, 1, 5), unit) == []


@given(lines(), points, st.floats(0.1, 100))
def test_line_circle_points_on_both(line, center, radius):
    circle = Circle(center, radius)
    pts = line_circle_intersections(line, circle)
    assert pts == sorted(pts, key=lambda p: (p.x, p.y))
    for p in pts:
        scale = 1 + p.norm() + radius
        assert abs(line.signed_distance(p)) <= 1e-12 * scale * 10
        assert abs(distance(p, center) - radius) <= 1e-12 * scale * 10


@given(points, lines())
def test_reflect_involution(p, line):
    back = reflect(reflect(p, line), line)
    assert distance(back, p) <= 1e-12 * (1 + p.norm() + abs(line.c)) * 4


@given(points, points, lines())
def test_reflect_isometry(p, q, line):
    d = distance(p, q)
    assert abs(distance(reflect(p, line), reflect(q, line)) - d) <= 1e-12 * (1 + d + abs(line.c)) * 8


@given(points, points)
def test_line_through_is_symmetric(p, q):
    if distance(p, q) < 1e-3:
        return
    l1, l2 = line_through(p, q), line_through(q, p)
    assert l1.n == l2.n
    assert l1.c == pytest.approx(l2.c, abs=1e-12 * (1 + abs(l1.c)))


@settings(max_examples=50)
@given(points, lines())
def test_foot_minimises_distance(p, line):
    f = foot(p, line)
    assert abs(line.signed_distance(f)) <= 1e-9
    t = line.direction()
    best = distance(p, f)
    for s in np.linspace(-1000, 1000, 1000):
        assert distance(p, f + t * float(s)) >= best - 1e-9 * (1 + best)


@given(lines(), lines())
def test_intersection_lies_on_both_lines(l1, l2):
    try:
        p = intersect_lines(l1, l2)
    except ParallelLines:
        return
    # solving amplifies roundoff by 1/|sin| of the crossing angle
    sin = abs(l1.n.dx * l2.n.dy - l1.n.dy * l2.n.dx)
    bound = 1e-12 * (1 + p.norm()) * max(1.0, 1.0 / sin) * 4
    assert abs(l1.signed_distance(p)) <= bound
    assert abs(l2.signed_distance(p)) <= bound


@given(points, points, points)
def test_angle_symmetric(o, p, q):
    try:
        a = angle_at(o, p, q)
    except DegenerateAngle:
        return
    assert a == angle_at(o, q, p)
    assert 0 <= a <= math.pi

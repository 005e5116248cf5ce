"""Triangle type and the classical centres the constructions rely on."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTriangle
from .kernel import (
    FLOOR,
    Circle,
    Point,
    Vector,
    angle_at,
    cross,
    distance,
    dot,
    line_through,
    local_scale,
    vector_between,
)


@dataclass(frozen=True, slots=True)
class Triangle:
    """Three non-collinear vertices. Index 0, 1, 2 refers to a, b, c."""

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        area2 = cross(vector_between(self.a, self.b), vector_between(self.a, self.c))
        scale = local_scale(self.a, self.b, self.c)
        if abs(area2) <= FLOOR * scale * scale:
            raise DegenerateTriangle(
                f"vertices {self.a}, {self.b}, {self.c} are collinear or coincident"
            )

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __getitem__(self, i: int) -> Point:
        return (self.a, self.b, self.c)[i]

    def opposite(self, i: int) -> tuple[Point, Point]:
        """The endpoints of the side facing vertex ``i``, in cyclic order."""
        v = self.vertices
        return v[(i + 1) % 3], v[(i + 2) % 3]

    def side_lengths(self) -> tuple[float, float, float]:
        return (distance(self.b, self.c), distance(self.c, self.a), distance(self.a, self.b))


def _circumcenter_offset(t: Triangle) -> Vector:
    # solved relative to vertex a to keep cancellation local
    bx, by = t.b.x - t.a.x, t.b.y - t.a.y
    cx, cy = t.c.x - t.a.x, t.c.y - t.a.y
    d = 2.0 * (bx * cy - by * cx)
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    return Vector((cy * b2 - by * c2) / d, (bx * c2 - cx * b2) / d)


def circumcircle(t: Triangle) -> Circle:
    u = _circumcenter_offset(t)
    center = t.a + u
    radius = (u.norm() + distance(center, t.b) + distance(center, t.c)) / 3.0
    return Circle(center, radius)


def circumcenter(t: Triangle) -> Point:
    return t.a + _circumcenter_offset(t)


def orthocenter(t: Triangle) -> Point:
    """Orthocenter via the Euler relation H = A + B + C - 2O."""
    u = _circumcenter_offset(t)
    ab, ac = vector_between(t.a, t.b), vector_between(t.a, t.c)
    return Point(t.a.x + ab.dx + ac.dx - 2.0 * u.dx, t.a.y + ab.dy + ac.dy - 2.0 * u.dy)


def incenter(t: Triangle) -> Point:
    la, lb, lc = t.side_lengths()
    p = la + lb + lc
    # weights applied to offsets from a for the same reason as the circumcentre
    ab, ac = vector_between(t.a, t.b), vector_between(t.a, t.c)
    return Point(t.a.x + (lb * ab.dx + lc * ac.dx) / p, t.a.y + (lb * ab.dy + lc * ac.dy) / p)


def arc_midpoint(t: Triangle, opposite: int) -> Point:
    """Midpoint of the circumcircle arc cut off by the side facing ``opposite``.

    Takes the arc that does not contain the vertex itself. The perpendicular
    bisector of that side passes through the circumcentre, so its two
    intersections with the circle are O +/- R*n for the side's unit normal n;
    the one on the far side of the chord from the vertex is returned.
    """
    if opposite not in (0, 1, 2):
        raise IndexError(f"vertex index must be 0, 1 or 2, got {opposite}")
    circle = circumcircle(t)
    p, q = t.opposite(opposite)
    side = line_through(p, q)
    o, r = circle.center, circle.radius
    n = side.n
    if side.signed_distance(t[opposite]) > 0:
        n = -n
    return Point(o.x + r * n.dx, o.y + r * n.dy)


def is_acute(t: Triangle) -> bool:
    v = t.vertices
    for i in range(3):
        p, q = t.opposite(i)
        if dot(vector_between(v[i], p), vector_between(v[i], q)) <= 0:
            return False
    return True


def angles(t: Triangle) -> tuple[float, float, float]:
    return tuple(angle_at(t[i], *t.opposite(i)) for i in range(3))


def arc_measures(t: Triangle) -> tuple[float, float, float]:
    """Half-arc measures (alpha, beta, gamma) at the three arc midpoints.

    Each is the central angle between an arc midpoint and one endpoint of its
    arc, which by the inscribed-angle theorem equals the triangle angle at the
    opposite vertex.
    """
    o = circumcenter(t)
    out = []
    for i in range(3):
        m = arc_midpoint(t, i)
        p, q = t.opposite(i)
        out.append(0.5 * (angle_at(o, m, p) + angle_at(o, m, q)))
    return tuple(out)


def unit_equilateral() -> Triangle:
    """Equilateral triangle inscribed in the unit circle, apex at (0, 1)."""
    h = math.sqrt(3.0) / 2.0
    return Triangle(Point(0.0, 1.0), Point(-h, -0.5), Point(h, -0.5))

"""Plane primitives: points, vectors, lines in unit-normal form, circles.

All values are immutable and every operation is a pure function. Inputs are
judged degenerate against ``FLOOR`` times a local scale, the larger of 1 and
the magnitudes of the operands involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    DegenerateAngle,
    NonFiniteValue,
    ParallelLines,
)

FLOOR = 1e-9


def _check_finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteValue(f"non-finite coordinate {v!r}")


@dataclass(frozen=True, slots=True)
class Vector:
    dx: float
    dy: float

    def __post_init__(self):
        _check_finite(self.dx, self.dy)

    def __add__(self, other: Vector) -> Vector:
        return Vector(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: Vector) -> Vector:
        return Vector(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> Vector:
        return Vector(-self.dx, -self.dy)

    def __mul__(self, k: float) -> Vector:
        return Vector(self.dx * k, self.dy * k)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.dx
        yield self.dy

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        _check_finite(self.x, self.y)

    def __add__(self, v: Vector) -> Point:
        return Point(self.x + v.dx, self.y + v.dy)

    def __sub__(self, other):
        if isinstance(other, Point):
            return Vector(self.x - other.x, self.y - other.y)
        return Point(self.x - other.dx, self.y - other.dy)

    def __iter__(self):
        yield self.x
        yield self.y

    def norm(self) -> float:
        """Distance from the origin."""
        return math.hypot(self.x, self.y)


@dataclass(frozen=True, slots=True)
class Line:
    """Points P with ``n . P == c``; ``n`` is a unit normal in canonical sign."""

    n: Vector
    c: float

    def __post_init__(self):
        _check_finite(self.c)
        if abs(self.n.norm() - 1.0) > 1e-12:
            raise ValueError(f"line normal {self.n} is not unit length")
        if not (self.n.dx > 0 or (self.n.dx == 0 and self.n.dy > 0)):
            raise ValueError(f"line normal {self.n} is not in canonical sign")

    @classmethod
    def from_normal(cls, nx: float, ny: float, c: float) -> Line:
        """Build the line ``nx*x + ny*y = c``, normalising and fixing the sign."""
        length = math.hypot(nx, ny)
        if length <= 0 or not math.isfinite(length):
            raise ValueError("line normal must be a finite non-zero vector")
        nx, ny, c = nx / length, ny / length, c / length
        if nx < 0 or (nx == 0 and ny < 0):
            nx, ny, c = -nx, -ny, -c
        # collapse -0.0 so equal lines compare equal
        return cls(Vector(nx + 0.0, ny + 0.0), c + 0.0)

    def signed_distance(self, p: Point) -> float:
        return self.n.dx * p.x + self.n.dy * p.y - self.c

    def direction(self) -> Vector:
        return Vector(-self.n.dy, self.n.dx)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        _check_finite(self.radius)
        if not self.radius > 0:
            raise ValueError(f"circle radius must be positive, got {self.radius}")


def vector_between(p: Point, q: Point) -> Vector:
    return Vector(q.x - p.x, q.y - p.y)


def dot(u: Vector, v: Vector) -> float:
    return u.dx * v.dx + u.dy * v.dy


def cross(u: Vector, v: Vector) -> float:
    return u.dx * v.dy - u.dy * v.dx


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def distance(p: Point, q: Point) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def local_scale(*points: Point) -> float:
    return max(1.0, *(p.norm() for p in points))


def line_through(p: Point, q: Point) -> Line:
    """The line through two distinct points.

    The offset is the mean of ``n.p`` and ``n.q`` so that the result does not
    depend on argument order.
    """
    d = vector_between(p, q)
    length = d.norm()
    if length <= FLOOR * local_scale(p, q):
        raise CoincidentPoints(f"cannot draw a line through coincident points {p} and {q}")
    nx, ny = -d.dy / length, d.dx / length
    if nx < 0 or (nx == 0 and ny < 0):
        nx, ny = -nx, -ny
    nx, ny = nx + 0.0, ny + 0.0
    c = 0.5 * ((nx * p.x + ny * p.y) + (nx * q.x + ny * q.y))
    return Line(Vector(nx, ny), c)


def reflect(p: Point, line: Line) -> Point:
    s = 2.0 * line.signed_distance(p)
    return Point(p.x - s * line.n.dx, p.y - s * line.n.dy)


def foot(p: Point, line: Line) -> Point:
    """Orthogonal projection of ``p`` onto ``line``."""
    s = line.signed_distance(p)
    return Point(p.x - s * line.n.dx, p.y - s * line.n.dy)


def intersect_lines(l1: Line, l2: Line) -> Point:
    det = cross(l1.n, l2.n)
    if abs(det) <= FLOOR:
        raise ParallelLines("lines are parallel or coincident")
    x = (l1.c * l2.n.dy - l2.c * l1.n.dy) / det
    y = (l1.n.dx * l2.c - l2.n.dx * l1.c) / det
    return Point(x, y)


def angle_at(o: Point, p: Point, q: Point) -> float:
    """Angle POQ in radians, in [0, pi]."""
    u, v = vector_between(o, p), vector_between(o, q)
    nu, nv = u.norm(), v.norm()
    floor = FLOOR * local_scale(o, p, q)
    if nu <= floor or nv <= floor:
        raise DegenerateAngle(f"zero-length ray in angle at {o}")
    cos_theta = dot(u, v) / (nu * nv)
    return math.acos(min(1.0, max(-1.0, cos_theta)))


def line_circle_intersections(line: Line, circle: Circle) -> list[Point]:
    """Intersections of a line and a circle, sorted by (x, y).

    A line whose distance to the centre matches the radius to within 1e-12
    relative is treated as tangent and yields its single touching point.
    """
    r = circle.radius
    d = line.signed_distance(circle.center)
    gap = r - abs(d)
    if gap < -1e-12 * r:
        return []
    base = Point(circle.center.x - d * line.n.dx, circle.center.y - d * line.n.dy)
    if gap <= 1e-12 * r:
        return [base]
    h = math.sqrt(gap * (r + abs(d)))
    t = line.direction()
    pts = [Point(base.x + h * t.dx, base.y + h * t.dy), Point(base.x - h * t.dx, base.y - h * t.dy)]
    return sorted(pts, key=lambda p: (p.x, p.y))

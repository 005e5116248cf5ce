"""Derived triangles: reflected orthocenter, double reflection, arc midpoints, Fuhrmann.

Every construction accepts any non-degenerate base triangle; restricting to
acute bases is left to the caller. A derived triangle that collapses raises
:class:`DegenerateConstruction` carrying the collapsed vertices.
"""

from __future__ import annotations

from .centers import Triangle, arc_midpoint, orthocenter
from .errors import DegenerateConstruction, DegenerateTriangle
from .kernel import Point, line_through, reflect


def _triangle(points: tuple[Point, Point, Point], what: str) -> Triangle:
    try:
        return Triangle(*points)
    except DegenerateTriangle as exc:
        raise DegenerateConstruction(f"{what} collapsed: {exc}", points=points) from None


def _sides(t: Triangle):
    # side i is the line facing vertex i: BC, CA, AB
    return [line_through(*t.opposite(i)) for i in range(3)]


def reflected_orthocenter_triangle(t: Triangle) -> Triangle:
    """Reflections of the orthocenter over BC, CA, AB; they lie on the circumcircle."""
    h = orthocenter(t)
    return _triangle(tuple(reflect(h, side) for side in _sides(t)), "reflected-orthocenter triangle")


def double_reflection_triangle(t: Triangle) -> Triangle:
    """Reflect A, B, C over the chords B'C', C'A', A'B' of the reflected-orthocenter triangle."""
    chords = _sides(reflected_orthocenter_triangle(t))
    return _triangle(tuple(reflect(v, chord) for v, chord in zip(t, chords)), "double-reflection triangle")


def incenter_arc_triangle(t: Triangle) -> Triangle:
    return _triangle(tuple(arc_midpoint(t, i) for i in range(3)), "arc-midpoint triangle")


def fuhrmann_triangle(t: Triangle) -> Triangle:
    """Each arc midpoint mirrored over the side that cuts off its arc."""
    pts = tuple(reflect(arc_midpoint(t, i), side) for i, side in enumerate(_sides(t)))
    return _triangle(pts, "Fuhrmann triangle")

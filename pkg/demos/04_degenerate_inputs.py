"""
Degenerate inputs
=================

Two triangles where a construction collapses. The equilateral triangle
makes the Fuhrmann triangle a single point, so every assertion about it
is skipped. The right triangle sends two reflected orthocenters to the
same place.
"""

import math

from fuhrmann import (
    DegenerateConstruction, Point, ToleranceContext, Triangle, evaluate, fuhrmann_triangle,
    parse, reflected_orthocenter_triangle,
)
from fuhrmann.centers import angles, unit_equilateral
from fuhrmann.cli import corpus_source

eq = unit_equilateral()
try:
    fuhrmann_triangle(eq)
except DegenerateConstruction as err:
    print("equilateral:", err)

script = parse(corpus_source("stevanovic.geo"))
print([o.status for o in evaluate(script, eq, ToleranceContext(1e-9, 1.0))])

right = Triangle(Point(0, 0), Point(2, 0), Point(0, 2))
try:
    reflected_orthocenter_triangle(right)
except DegenerateConstruction as err:
    # the points are still computed, only the triangle is rejected
    print("right angle:", err, [(round(p.x, 9), round(p.y, 9)) for p in err.points])

# near-degenerate but valid: a sliver triangle still works
sliver = Triangle(Point(0, 0), Point(1, 0), Point(0.5, 1e-6))
print("sliver Fuhrmann:", fuhrmann_triangle(sliver).vertices)
print("angles sum:", sum(math.degrees(a) for a in angles(sliver)))

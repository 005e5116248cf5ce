"""
The Fuhrmann figure of one triangle
===================================

Build every named point for the scalene triangle (0,0), (4,0), (1,3) and
check by eye that the orthocenter of the Fuhrmann triangle lands on the
incenter.
"""

import math

from fuhrmann import (
    Point, Triangle, circumcircle, double_reflection_triangle, fuhrmann_triangle,
    incenter, incenter_arc_triangle, orthocenter, reflected_orthocenter_triangle,
)

t = Triangle(Point(0, 0), Point(4, 0), Point(1, 3))
c = circumcircle(t)
print("orthocenter H  ", orthocenter(t))
print("circumcenter O ", c.center, " R =", c.radius, "(sqrt 5 =", math.sqrt(5), ")")
print("incenter I     ", incenter(t))

# reflect H across each side: A'B'C' sits on the circumcircle
for name, tri in [
    ("reflected orthocenter", reflected_orthocenter_triangle(t)),
    ("double reflection", double_reflection_triangle(t)),
    ("arc midpoints", incenter_arc_triangle(t)),
    ("Fuhrmann", fuhrmann_triangle(t)),
]:
    print(f"{name:22s}", [(round(p.x, 6), round(p.y, 6)) for p in tri])

k = orthocenter(fuhrmann_triangle(t))
gap = math.dist((k.x, k.y), (incenter(t).x, incenter(t).y))
print("orthocenter of Fuhrmann triangle:", k, " distance to I:", gap)

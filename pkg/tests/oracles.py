"""Brute-force reference constructions used only by the tests.

Everything here works on numpy arrays and solves each construction the
textbook way (altitudes, angle bisectors, quadratics) so that it shares no
code path with the package under test.
"""

import numpy as np


def _meet(p1, d1, p2, d2):
    """Intersection of the lines p1 + s*d1 and p2 + t*d2."""
    s, _ = np.linalg.solve(np.column_stack([d1, -d2]), p2 - p1)
    return p1 + s * d1


def _perp(v):
    return np.array([-v[1], v[0]])


def orthocenter(a, b, c):
    # altitude from a is perpendicular to bc, altitude from b perpendicular to ca
    return _meet(a, _perp(c - b), b, _perp(a - c))


def circumcenter(a, b, c):
    return _meet((a + b) / 2, _perp(b - a), (a + c) / 2, _perp(c - a))


def incenter(a, b, c):
    def bisector(v, p, q):
        return (p - v) / np.linalg.norm(p - v) + (q - v) / np.linalg.norm(q - v)

    return _meet(a, bisector(a, b, c), b, bisector(b, c, a))


def reflect(p, q1, q2):
    """Mirror p across the line through q1 and q2 by projecting onto it."""
    d = q2 - q1
    t = np.dot(p - q1, d) / np.dot(d, d)
    foot = q1 + t * d
    return 2 * foot - p


def second_intersection(p, d, center, radius):
    """Other root of |p + t d - center| = radius, given p is on the circle."""
    # quadratic a t^2 + b t + c = 0; the root t=0 is p itself
    qa = np.dot(d, d)
    qb = 2 * np.dot(d, p - center)
    qc = np.dot(p - center, p - center) - radius**2
    roots = np.roots([qa, qb, qc]).real
    t = roots[np.argmax(np.abs(roots))]
    return p + t * d


def line_circle(p, d, center, radius):
    qa = np.dot(d, d)
    qb = 2 * np.dot(d, p - center)
    qc = np.dot(p - center, p - center) - radius**2
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    ts = sorted({(-qb - np.sqrt(disc)) / (2 * qa), (-qb + np.sqrt(disc)) / (2 * qa)})
    return sorted((tuple(p + t * d) for t in ts))


def arc_midpoint_by_bisector(v, p, q):
    """Second intersection of the bisector from v with the circumcircle of v, p, q."""
    center = circumcenter(v, p, q)
    radius = np.linalg.norm(v - center)
    i = incenter(v, p, q)
    return second_intersection(v, i - v, center, radius)


def figure(a, b, c):
    """All named points of the constructions, by the routes above."""
    a, b, c = (np.asarray(x, dtype=float) for x in (a, b, c))
    h = orthocenter(a, b, c)
    o = circumcenter(a, b, c)
    ap, bp, cp = reflect(h, b, c), reflect(h, c, a), reflect(h, a, b)
    x, y, z = reflect(a, bp, cp), reflect(b, cp, ap), reflect(c, ap, bp)
    ma = arc_midpoint_by_bisector(a, b, c)
    mb = arc_midpoint_by_bisector(b, c, a)
    mc = arc_midpoint_by_bisector(c, a, b)
    return {
        "orthocenter": h,
        "circumcenter": o,
        "circumradius": float(np.linalg.norm(a - o)),
        "incenter": incenter(a, b, c),
        "reflected_orthocenter": [ap, bp, cp],
        "double_reflection": [x, y, z],
        "arc_midpoints": [ma, mb, mc],
        "fuhrmann": [reflect(ma, b, c), reflect(mb, c, a), reflect(mc, a, b)],
    }

#!/usr/bin/env python3

"""
Delaunay triangulation by incremental insertion, with exact predicates.

Coordinates are doubles, hence dyadic rationals: scaling them by a common
power of two makes them integers, on which the orientation and in-circle
determinants are evaluated exactly.
"""

import math
import fractions
import functools

import numpy as np

# The enclosing triangle lies this many spans away from the points. Hull
# triangles thinner than about 2**-40 of the span may be missed.
_SUPER_SCALE = 2 ** 40


def exact_coordinates(points):
    """Maps float points to integer points by a common exact scaling."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    exact = [(fractions.Fraction(float(x)), fractions.Fraction(float(y))) for x, y in points]
    denominators = [v.denominator for point in exact for v in point]
    scale = functools.reduce(lambda a, b: a * b // math.gcd(a, b), denominators, 1)
    return [(int(x * scale), int(y * scale)) for x, y in exact]


def orientation(a, b, c):
    """Positive when `a, b, c` turn counter-clockwise, negative when clockwise, 0 when collinear."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def in_circle(a, b, c, d):
    """Positive when `d` lies inside the circumcircle of the counter-clockwise triangle `a, b, c`."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    return ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
            - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))


def is_collinear(points):
    """Whether all points lie on one line, decided exactly."""
    coords = exact_coordinates(points)
    if len(coords) < 3:
        return True
    origin = coords[0]
    other = next((c for c in coords[1:] if c != origin), None)
    if other is None:
        return True
    return all(orientation(origin, other, c) == 0 for c in coords)


def _canonical(triangle):
    i = triangle.index(min(triangle))
    return triangle[i:] + triangle[:i]


def delaunay_triangles(points):
    """
    **Description**

    Triangulates distinct, non-collinear 2-D points.

    Points are inserted one at a time in row order into a triangulation of
    an enclosing triangle; the triangles whose circumcircle strictly contains
    the new point are replaced by a fan around it.

    **Arguments**

    * **points** (array) - Distinct points, shape `(n, 2)`, not all collinear.

    **Return**

    * (array) - Shape `(m, 3)`: vertex indices of each triangle, counter-clockwise.

    **Example**
    ~~~python
    triangles = delaunay_triangles([[0, 0], [1, 0], [0, 1], [1, 1]])
    len(triangles)  # 2
    ~~~
    """
    coords = exact_coordinates(points)
    n = len(coords)
    assert n >= 3, 'at least three points are needed'
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    far = 3 * span * _SUPER_SCALE
    cx = (min(xs) + max(xs)) // 2
    cy = (min(ys) + max(ys)) // 2
    coords = coords + [(cx - far, cy - far), (cx + far, cy - far), (cx, cy + far)]

    triangles = {(n, n + 1, n + 2)}
    for index in range(n):
        point = coords[index]
        bad = [t for t in triangles
               if in_circle(coords[t[0]], coords[t[1]], coords[t[2]], point) > 0]
        edge_count = {}
        for t in bad:
            for edge in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                key = frozenset(edge)
                edge_count[key] = edge_count.get(key, 0) + 1
        assert bad, 'point ' + str(index) + ' is not inside the triangulation'
        for t in bad:
            triangles.discard(t)
        for t in bad:
            for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                if edge_count[frozenset((u, v))] == 1:
                    triangles.add(_canonical((u, v, index)))

    kept = sorted(t for t in triangles if max(t) < n)
    return np.array(kept, dtype=int).reshape(-1, 3)


def circumradii(points, triangles):
    """Circumradius of each triangle; infinite for flat triangles."""
    points = np.asarray(points, dtype=float)
    a = points[triangles[:, 0]]
    b = points[triangles[:, 1]]
    c = points[triangles[:, 2]]
    ab = np.linalg.norm(a - b, axis=1)
    bc = np.linalg.norm(b - c, axis=1)
    ca = np.linalg.norm(c - a, axis=1)
    cross = np.abs((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))
    with np.errstate(divide='ignore', invalid='ignore'):
        radii = ab * bc * ca / (2.0 * cross)
    radii[cross == 0] = np.inf
    return radii

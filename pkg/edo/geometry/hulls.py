#!/usr/bin/env python3

import logging

import numpy as np
from scipy.spatial import ConvexHull
from shapely.geometry import Polygon as ShapelyPolygon
from shapely.ops import unary_union

try:
    from scipy.spatial import QhullError
except ImportError:
    from scipy.spatial.qhull import QhullError

from .polygon import Polygon
from .delaunay import circumradii, delaunay_triangles, is_collinear

logger = logging.getLogger(__name__)


def _distinct_points(points):
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2 or len(points) < 1:
        raise ValueError('expected at least one 2-D point, got shape ' + str(points.shape))
    return np.unique(points, axis=0)


def _degenerate_polygon(points):
    # Lexicographic order is monotone along a line, so the first and last
    # distinct points are the extreme ones.
    if len(points) == 1:
        return Polygon(points[:1], degenerate=True)
    return Polygon(points[[0, -1]], degenerate=True)


def _is_degenerate(points):
    return len(points) < 3 or is_collinear(points)


def convex_hull(points):
    """
    **Description**

    The convex hull of a set of 2-D points.

    Fewer than three distinct points, or collinear points, give a degenerate
    polygon of area 0.

    **Arguments**

    * **points** (array) - Shape `(n, 2)`, `n >= 1`.

    **Return**

    * (Polygon) - The hull, vertices counter-clockwise.

    **Example**
    ~~~python
    convex_hull([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]]).area  # 1.0
    ~~~
    """
    points = _distinct_points(points)
    if _is_degenerate(points):
        return _degenerate_polygon(points)
    try:
        hull = ConvexHull(points)
    except QhullError:
        logger.debug('qhull failed on %d points, hull treated as degenerate', len(points))
        return _degenerate_polygon(points)
    return Polygon(points[hull.vertices])


def _union(points, triangles):
    if len(triangles) == 0:
        return []
    union = unary_union([ShapelyPolygon(points[t]) for t in triangles])
    if union.geom_type == 'Polygon':
        parts = [union]
    else:
        parts = [g for g in getattr(union, 'geoms', []) if g.geom_type == 'Polygon']
    polygons = [Polygon.from_shapely(part) for part in parts if not part.is_empty]
    return sorted(polygons, key=lambda p: -p.area)


def alpha_shape(points, alpha):
    """
    **Description**

    The α-shape of a set of 2-D points: the union of the Delaunay triangles
    whose circumradius is at most `1 / alpha`.

    `alpha <= 0` keeps every triangle and gives the convex hull.

    **Arguments**

    * **points** (array) - Shape `(n, 2)`.
    * **alpha** (float) - Inverse of the largest circumradius kept.

    **Return**

    * (list) - The polygons of the shape, largest first. Degenerate inputs
        give a single degenerate polygon.
    """
    points = _distinct_points(points)
    if _is_degenerate(points):
        return [_degenerate_polygon(points)]
    triangles = delaunay_triangles(points)
    radii = circumradii(points, triangles)
    if alpha > 0:
        keep = radii <= 1.0 / alpha
    else:
        keep = np.ones(len(triangles), dtype=bool)
    return _union(points, triangles[keep])


def smallest_single_polygon_alpha(points):
    """
    **Description**

    Finds the tightest α-shape that is a single polygon containing every
    point.

    The shape only changes at the circumradii of the Delaunay triangles, so
    the search runs over the sorted distinct circumradii: it returns the
    smallest cutoff `r` whose triangles cover every point and form one
    polygon, and `alpha = 1 / r`. Keeping every triangle gives the convex
    hull, so a solution always exists.

    Covering every point is monotone in the cutoff and is located by
    bisection; forming one polygon is not, so the cutoffs from there on are
    scanned in order.

    **Arguments**

    * **points** (array) - Shape `(n, 2)`.

    **Return**

    * (tuple) - `(alpha, polygon)`. Degenerate inputs give `alpha = 0` and the
        degenerate convex hull.

    **Example**
    ~~~python
    alpha, concave = smallest_single_polygon_alpha(points)
    convex_hull(points).area >= concave.area
    ~~~
    """
    points = _distinct_points(points)
    if _is_degenerate(points):
        return 0.0, _degenerate_polygon(points)
    triangles = delaunay_triangles(points)
    radii = circumradii(points, triangles)
    cutoffs = np.unique(radii)

    def covers(cutoff):
        return len(np.unique(triangles[radii <= cutoff])) == len(points)

    lo, hi = 0, len(cutoffs) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if covers(cutoffs[mid]):
            hi = mid
        else:
            lo = mid + 1
    for index in range(lo, len(cutoffs)):
        polygons = _union(points, triangles[radii <= cutoffs[index]])
        if len(polygons) == 1:
            return 1.0 / cutoffs[index], polygons[0]
    # Every triangle together is the convex hull.
    return 1.0 / cutoffs[-1], _union(points, triangles)[0]


def convexity(points):
    """
    **Description**

    Ratio of the area of the tightest single-polygon α-shape of a cluster to
    the area of its convex hull.

    Degenerate clusters (a point, a line) are perfectly convex and give 1.

    **Arguments**

    * **points** (array) - The cluster, shape `(n, 2)`.

    **Return**

    * (float) - The ratio, in [0, 1].
    """
    points = _distinct_points(points)
    if _is_degenerate(points):
        return 1.0
    hull = convex_hull(points)
    if hull.area <= 0:
        return 1.0
    _, concave = smallest_single_polygon_alpha(points)
    return float(np.clip(concave.area / hull.area, 0.0, 1.0))

#!/usr/bin/env python3

r"""
Cluster shape analysis in the plane: convex hulls, α-shapes and convexity.
"""

from .polygon import Polygon, shoelace_area
from .delaunay import delaunay_triangles, circumradii, orientation, in_circle, is_collinear
from .hulls import convex_hull, alpha_shape, smallest_single_polygon_alpha, convexity

#!/usr/bin/env python3

import numpy as np
from shapely.geometry import Polygon as ShapelyPolygon


def shoelace_area(vertices):
    """Unsigned area of a closed ring given by its vertices, by the shoelace formula."""
    vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
    if len(vertices) < 3:
        return 0.0
    x = vertices[:, 0]
    y = vertices[:, 1]
    return float(abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) / 2.0)


class Polygon(object):

    """
    **Description**

    A simple polygon, possibly with holes.

    Degenerate polygons stand for the hull of fewer than three distinct or of
    collinear points: their vertices are the extreme points and their area is 0.

    **Arguments**

    * **vertices** (array) - Vertices of the exterior ring, without repeating the first one.
    * **holes** (list, *optional*, default=()) - Vertices of each interior ring.
    * **degenerate** (bool, *optional*, default=False) - Whether the polygon is degenerate.
    """

    def __init__(self, vertices, holes=(), degenerate=False):
        self.vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
        self.holes = [np.asarray(hole, dtype=float).reshape(-1, 2) for hole in holes]
        self.degenerate = bool(degenerate)

    @property
    def area(self):
        if self.degenerate:
            return 0.0
        area = shoelace_area(self.vertices) - sum(shoelace_area(hole) for hole in self.holes)
        return max(area, 0.0)

    @classmethod
    def from_shapely(cls, geometry):
        exterior = np.asarray(geometry.exterior.coords)[:-1]
        holes = [np.asarray(ring.coords)[:-1] for ring in geometry.interiors]
        return cls(exterior, holes)

    def to_shapely(self):
        return ShapelyPolygon(self.vertices, [hole for hole in self.holes])

    def to_dict(self):
        return {
            'vertices': self.vertices.tolist(),
            'holes': [hole.tolist() for hole in self.holes],
            'area': self.area,
            'degenerate': self.degenerate,
        }

    def __repr__(self):
        return ('Polygon(' + str(len(self.vertices)) + ' vertices, area=' + repr(self.area)
                + (', degenerate' if self.degenerate else '') + ')')

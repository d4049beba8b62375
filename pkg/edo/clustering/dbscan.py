#!/usr/bin/env python3

import collections

import numpy as np
from scipy.spatial import cKDTree

from edo.utils import ConfigurationError
from .metrics import as_points

NOISE = -1


class DbscanResult(collections.namedtuple('DbscanResult', ('labels', 'n_clusters', 'core_mask'))):

    """
    **Description**

    The outcome of DBSCAN.

    **Arguments**

    * **labels** (array) - Cluster index of every point, or `NOISE`.
    * **n_clusters** (int) - Number of clusters, noise excluded.
    * **core_mask** (array) - Whether each point is a core point.
    """

    __slots__ = ()

    @property
    def noise_mask(self):
        return self.labels == NOISE

    @property
    def n_noise(self):
        return int(np.sum(self.noise_mask))

    @property
    def n_groups(self):
        """Number of clusters when the noise points count as one more cluster."""
        return self.n_clusters + (1 if self.n_noise > 0 else 0)


def dbscan(X, eps, min_points):
    """
    **Description**

    Density-based clustering with noise.

    A point is a core point when at least `min_points` points, itself
    included, lie within distance `eps`. Clusters grow from core points in
    row order by breadth-first expansion; border points join the first
    cluster that reaches them, and unreached points are labelled `NOISE`.

    **Arguments**

    * **X** (array) - The points, one per row.
    * **eps** (float) - Neighbourhood radius, positive.
    * **min_points** (int) - Neighbourhood size of core points, at least 1.

    **Return**

    * (DbscanResult) - Labels, number of clusters and core points.

    **Example**
    ~~~python
    result = dbscan(X, eps=0.1, min_points=5)
    result.n_clusters, result.n_noise
    ~~~
    """
    if not eps > 0:
        raise ConfigurationError('eps: must be positive, got ' + repr(eps))
    if isinstance(min_points, bool) or int(min_points) != min_points or min_points < 1:
        raise ConfigurationError('min_points: must be a positive integer, got ' + repr(min_points))
    X = as_points(X)
    n = len(X)
    neighbours = [sorted(nb) for nb in cKDTree(X).query_ball_point(X, r=eps)]
    core = np.array([len(nb) >= min_points for nb in neighbours], dtype=bool)
    labels = np.full(n, NOISE, dtype=int)
    n_clusters = 0
    for start in range(n):
        if not core[start] or labels[start] != NOISE:
            continue
        labels[start] = n_clusters
        queue = collections.deque([start])
        while queue:
            point = queue.popleft()
            for other in neighbours[point]:
                if labels[other] == NOISE:
                    labels[other] = n_clusters
                    if core[other]:
                        queue.append(other)
        n_clusters += 1
    return DbscanResult(labels, n_clusters, core)

#!/usr/bin/env python3

import logging
import collections

import numpy as np
from scipy.spatial.distance import cdist

from edo.utils import ConfigurationError
from .metrics import as_points, cluster_means, squared_distances

logger = logging.getLogger(__name__)

# Relative slack on the per-iteration descent check.
DESCENT_TOLERANCE = 1e-12


class Partition(collections.namedtuple('Partition', ('labels', 'k', 'centroids', 'n_iter', 'inertia_path'))):

    """
    **Description**

    A partition of a dataset into `k` clusters.

    **Arguments**

    * **labels** (array) - Cluster index of every point, in `[0, k)`.
    * **k** (int) - Number of clusters.
    * **centroids** (array) - Intra-cluster means, one row per cluster, or None.
    * **n_iter** (int) - Number of Lloyd iterations performed.
    * **inertia_path** (list) - Inertia after each iteration.
    """

    __slots__ = ()

    def __new__(cls, labels, k, centroids=None, n_iter=0, inertia_path=()):
        return super(Partition, cls).__new__(cls, labels, k, centroids, n_iter, list(inertia_path))

    @property
    def inertia(self):
        return self.inertia_path[-1] if self.inertia_path else None


def _kmeans_plus_plus(X, k, rng, metric):
    n = len(X)
    chosen = [int(rng.integers(n))]
    closest = cdist(X, X[chosen], metric=metric)[:, 0] ** 2
    for _ in range(1, k):
        total = closest.sum()
        if total > 0:
            index = int(rng.choice(n, p=closest / total))
        else:
            index = int(rng.integers(n))
        chosen.append(index)
        closest = np.minimum(closest, cdist(X, X[[index]], metric=metric)[:, 0] ** 2)
    return X[chosen].copy()


def _repair_empty(X, labels, centroids, k, metric):
    """
    Gives every empty cluster the point farthest from its centroid, taken from
    a cluster with more than one point; ties go to the lowest index.
    """
    counts = np.bincount(labels, minlength=k)
    for empty in np.flatnonzero(counts == 0):
        distances = squared_distances(X, centroids, labels, metric)
        candidates = counts[labels] > 1
        distances = np.where(candidates, distances, -np.inf)
        point = int(np.argmax(distances))
        counts[labels[point]] -= 1
        labels[point] = empty
        counts[empty] += 1
        centroids[empty] = X[point]
        logger.debug('empty cluster %d repaired with point %d', empty, point)
    return labels, centroids


def kmeans(X, k, rng=None, max_iter=300, init='k-means++', metric='euclidean'):
    """
    **Description**

    Lloyd's algorithm.

    Points are assigned to their closest centroid (ties to the lowest cluster
    index) and centroids are recomputed as intra-cluster means, until no
    point changes cluster or `max_iter` iterations were performed. A cluster
    left empty receives the point farthest from its centroid.

    **Arguments**

    * **X** (array) - The points, one per row; a `Dataset` or `Individual` also works.
    * **k** (int) - Number of clusters, at least 1.
    * **rng** (Generator, *optional*, default=None) - Source of randomness for the initialisation.
    * **max_iter** (int, *optional*, default=300) - Maximum number of iterations.
    * **init** (str, *optional*, default='k-means++') - `'k-means++'` or `'random'` (k distinct rows).
    * **metric** (str, *optional*, default='euclidean') - Distance used for assignments.

    **Return**

    * (Partition) - Labels, centroids and inertia path.

    **Example**
    ~~~python
    partition = kmeans(individual.dataset.values, k=2, rng=np.random.default_rng(0))
    partition.inertia
    ~~~
    """
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ConfigurationError('k: must be a positive integer, got ' + repr(k))
    k = int(k)
    if int(max_iter) != max_iter or max_iter < 1:
        raise ConfigurationError('max_iter: must be a positive integer, got ' + repr(max_iter))
    X = as_points(X)
    n = len(X)
    if n < k:
        raise ValueError('k-means needs at least k=' + str(k) + ' points, got ' + str(n))
    if rng is None:
        rng = np.random.default_rng()
    if init == 'k-means++':
        centroids = _kmeans_plus_plus(X, k, rng, metric)
    elif init == 'random':
        centroids = X[rng.choice(n, size=k, replace=False)].copy()
    else:
        raise ConfigurationError('init: expected k-means++ or random, got ' + repr(init))

    labels = None
    path = []
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        assigned = np.argmin(cdist(X, centroids, metric=metric), axis=1)
        assigned, centroids = _repair_empty(X, assigned, centroids, k, metric)
        converged = labels is not None and np.array_equal(assigned, labels)
        labels = assigned
        centroids = cluster_means(X, labels, k)
        value = float(np.mean(squared_distances(X, centroids, labels, metric)))
        if path and metric == 'euclidean':
            assert value <= path[-1] * (1 + DESCENT_TOLERANCE) + DESCENT_TOLERANCE, \
                'Lloyd iteration increased the inertia'
        path.append(value)
        if converged:
            break
    return Partition(labels, k, centroids, n_iter, path)

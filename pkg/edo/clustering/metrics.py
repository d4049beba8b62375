#!/usr/bin/env python3

import numpy as np
from scipy.spatial.distance import cdist, pdist, squareform

from edo.utils import SilhouetteUndefinedError


def as_points(X):
    """Returns the values of a `Dataset`, `Individual` or array as a 2-D float array."""
    if hasattr(X, 'dataset'):
        X = X.dataset
    if hasattr(X, 'values') and not isinstance(X, np.ndarray):
        X = X.values
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise ValueError('expected a 2-D array of points, got shape ' + str(X.shape))
    return X


def squared_distances(X, centroids, labels, metric='euclidean'):
    """Squared distance of every point to the centroid of its cluster."""
    if metric == 'euclidean':
        return np.sum((X - centroids[labels]) ** 2, axis=1)
    distances = cdist(X, centroids, metric=metric)
    return distances[np.arange(len(X)), labels] ** 2


def cluster_means(X, labels, k):
    counts = np.bincount(labels, minlength=k).astype(float)
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, labels, X)
    with np.errstate(invalid='ignore', divide='ignore'):
        return sums / counts[:, None]


def inertia(partition, X, metric='euclidean'):
    """
    **Description**

    Mean squared distance of the points of `X` to the centroid of their
    cluster.

    $$I(Z, X) = \\frac{1}{|X|} \\sum_{j=1}^{k} \\sum_{x \\in Z_j} d(x, z_j)^2$$

    Centroids are recomputed as intra-cluster means when the partition does
    not carry them.

    **Arguments**

    * **partition** (Partition) - Labels in `[0, k)` and optional centroids.
    * **X** (array) - The points, one per row.
    * **metric** (str, *optional*, default='euclidean') - Any metric of `scipy.spatial.distance.cdist`.

    **Return**

    * (float) - The inertia, non-negative.
    """
    X = as_points(X)
    labels = np.asarray(partition.labels, dtype=int)
    if len(labels) != len(X):
        raise ValueError('expected ' + str(len(X)) + ' labels, got ' + str(len(labels)))
    if labels.min() < 0 or labels.max() >= partition.k:
        raise ValueError('labels must lie in [0, ' + str(partition.k) + ')')
    centroids = partition.centroids
    if centroids is None:
        centroids = cluster_means(X, labels, partition.k)
    return float(np.mean(squared_distances(X, np.asarray(centroids), labels, metric)))


def silhouette_samples(labels, X, metric='euclidean'):
    """
    **Description**

    Silhouette value of every point.

    For a point `x` of cluster `Z_j`, `A(x)` is its mean distance to the other
    members of `Z_j` and `B(x)` the smallest mean distance to the members of
    another cluster. Its silhouette is `(B - A) / max(A, B)` when `|Z_j| > 1`
    and 0 otherwise, or when `max(A, B) = 0`.

    Any label values may be used, including a noise label.

    **Arguments**

    * **labels** (array) - Cluster label of every point.
    * **X** (array) - The points, one per row.
    * **metric** (str, *optional*, default='euclidean') - Any metric of `scipy.spatial.distance.pdist`.

    **Return**

    * (array) - One value per point, in [-1, 1].
    """
    X = as_points(X)
    _, inverse = np.unique(np.asarray(labels), return_inverse=True)
    inverse = inverse.reshape(-1)
    if len(inverse) != len(X):
        raise ValueError('expected ' + str(len(X)) + ' labels, got ' + str(len(inverse)))
    n_clusters = inverse.max() + 1 if len(inverse) else 0
    if n_clusters < 2:
        raise SilhouetteUndefinedError('the silhouette coefficient requires at least two clusters')
    distances = squareform(pdist(X, metric=metric))
    membership = np.zeros((len(X), n_clusters))
    membership[np.arange(len(X)), inverse] = 1.0
    sums = distances @ membership
    counts = membership.sum(axis=0)
    rows = np.arange(len(X))
    own_counts = counts[inverse]
    a = np.zeros(len(X))
    shared = own_counts > 1
    a[shared] = sums[rows, inverse][shared] / (own_counts[shared] - 1)
    means = sums / counts
    means[rows, inverse] = np.inf
    b = means.min(axis=1)
    scale = np.maximum(a, b)
    values = np.zeros(len(X))
    defined = shared & (scale > 0)
    values[defined] = (b[defined] - a[defined]) / scale[defined]
    return values


def silhouette(labels, X, metric='euclidean'):
    """
    **Description**

    The silhouette coefficient: mean silhouette value over all points.

    Raises `SilhouetteUndefinedError` when fewer than two clusters are present.

    **Example**
    ~~~python
    X = [[0, 0], [0, 1], [10, 0], [10, 1]]
    silhouette([0, 0, 1, 1], X)  # 0.9...
    ~~~
    """
    return float(np.mean(silhouette_samples(labels, X, metric)))

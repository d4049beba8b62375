#!/usr/bin/env python3

"""
Fitness functions of the clustering case study.

EDO minimises fitness, so measures that should be large are negated.
"""

import logging
import math

import numpy as np

from edo.utils import ConfigurationError, SilhouetteUndefinedError
from .metrics import as_points, silhouette
from .kmeans import kmeans
from .dbscan import dbscan

logger = logging.getLogger(__name__)

__all__ = [
    'ClusteringFitness',
    'InertiaFitness',
    'SilhouetteFitness',
    'DbscanComparisonFitness',
    'KMeansPreferableFitness',
    'DbscanPreferableFitness',
    'ClusteringGapFitness',
    'comparison_fitness',
    'list_fitnesses',
    'get_fitness',
]


def _silhouette_or_none(labels, X):
    try:
        return silhouette(labels, X)
    except SilhouetteUndefinedError:
        return None


class ClusteringFitness(object):

    """
    **Description**

    Base class of the fitness functions built on k-means.

    Instances are called as `fitness(individual, rng)`. When `seed` is given,
    k-means is initialised from `np.random.default_rng(seed)` instead of the
    generator handed in by the engine. Datasets with fewer rows than `k` get
    an infinite fitness.

    **Arguments**

    * **k** (int, *optional*, default=2) - Number of k-means clusters.
    * **seed** (int, *optional*, default=None) - Fixed seed of the k-means initialisation.
    * **max_iter** (int, *optional*, default=300) - Maximum number of Lloyd iterations.
    * **init** (str, *optional*, default='k-means++') - k-means initialisation.
    """

    name = None

    def __init__(self, k=2, seed=None, max_iter=300, init='k-means++'):
        errors = []
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
            errors.append('fitness.params.k: must be a positive integer, got ' + repr(k))
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, (int, np.integer))):
            errors.append('fitness.params.seed: must be an integer, got ' + repr(seed))
        if isinstance(max_iter, bool) or not isinstance(max_iter, (int, np.integer)) or max_iter < 1:
            errors.append('fitness.params.max_iter: must be a positive integer, got ' + repr(max_iter))
        if init not in ('k-means++', 'random'):
            errors.append('fitness.params.init: expected k-means++ or random, got ' + repr(init))
        if errors:
            raise ConfigurationError(errors)
        self.k = int(k)
        self.seed = seed
        self.max_iter = int(max_iter)
        self.init = init

    def params(self):
        return {'k': self.k, 'seed': self.seed, 'max_iter': self.max_iter, 'init': self.init}

    def _rng(self, rng):
        if self.seed is not None:
            return np.random.default_rng(self.seed)
        if rng is None:
            return np.random.default_rng()
        return rng

    def _kmeans(self, X, rng):
        return kmeans(X, self.k, rng=self._rng(rng), max_iter=self.max_iter, init=self.init)

    def _kmeans_details(self, X, partition):
        return {
            'k': self.k,
            'labels': partition.labels.tolist(),
            'centroids': partition.centroids.tolist(),
            'inertia': partition.inertia,
            'silhouette': _silhouette_or_none(partition.labels, X),
            'n_iter': partition.n_iter,
        }

    def score(self, X, rng):
        """Returns `(fitness, details)` for the points `X`."""
        raise NotImplementedError

    def evaluate(self, X, rng=None):
        """
        **Description**

        Evaluates the points `X` and returns the fitness together with the
        clusterings that produced it.

        **Return**

        * (tuple) - `(fitness, details)`; `details` is a JSON-serialisable dict.
        """
        X = as_points(X)
        if len(X) < self.k:
            logger.debug('%d rows for k=%d, fitness set to inf', len(X), self.k)
            return math.inf, {}
        return self.score(X, rng)

    def analyse(self, X, rng=None):
        return self.evaluate(X, rng)[1]

    def __call__(self, individual, rng=None):
        return self.evaluate(individual, rng)[0]

    def __repr__(self):
        params = ', '.join(k + '=' + repr(v) for k, v in self.params().items())
        return type(self).__name__ + '(' + params + ')'


class InertiaFitness(ClusteringFitness):

    """
    **Description**

    The inertia of the k-means partition of the dataset.

    **Example**
    ~~~python
    fitness = InertiaFitness(k=2)
    value = fitness(individual, rng)
    ~~~
    """

    name = 'inertia'

    def score(self, X, rng):
        partition = self._kmeans(X, rng)
        return partition.inertia, {'kmeans': self._kmeans_details(X, partition)}


class SilhouetteFitness(ClusteringFitness):

    """
    **Description**

    The negated silhouette coefficient of the k-means partition of the
    dataset. Partitions with a single cluster get an infinite fitness.
    """

    name = 'silhouette-kmeans'

    def score(self, X, rng):
        partition = self._kmeans(X, rng)
        details = {'kmeans': self._kmeans_details(X, partition)}
        coefficient = details['kmeans']['silhouette']
        if coefficient is None:
            return math.inf, details
        return -coefficient, details


def comparison_fitness(X, k, eps, min_points, seed=None, sign=1, rng=None, max_iter=300, init='k-means++'):
    """
    **Description**

    Compares the silhouette coefficients of DBSCAN and k-means clusterings.

    When DBSCAN finds at least two groups, counting the noise points as one
    group, the fitness is `sign * (S_D - S_k)`, with `S_D` the silhouette
    coefficient of the DBSCAN labels (noise as one cluster) and `S_k` that of
    the k-means labels; `sign=+1` favours datasets k-means clusters better
    and `sign=-1` those DBSCAN clusters better. With `sign='absolute'` the
    fitness is `|S_D - S_k|`. Otherwise the fitness is infinite.

    **Arguments**

    * **X** (array) - The points, one per row.
    * **k** (int) - Number of k-means clusters.
    * **eps** (float) - DBSCAN radius.
    * **min_points** (int) - DBSCAN core point threshold.
    * **seed** (int, *optional*, default=None) - Fixed seed of the k-means initialisation.
    * **sign** (int or str, *optional*, default=1) - `1`, `-1` or `'absolute'`.
    * **rng** (Generator, *optional*, default=None) - Used when `seed` is None.

    **Return**

    * (float) - The fitness; finite values lie in [-2, 2].
    """
    value, _ = _compare(as_points(X), k, eps, min_points, seed, sign, rng, max_iter, init)
    return value


def _compare(X, k, eps, min_points, seed, sign, rng, max_iter, init):
    result = dbscan(X, eps, min_points)
    details = {'dbscan': {
        'eps': eps,
        'min_points': min_points,
        'labels': result.labels.tolist(),
        'n_clusters': result.n_clusters,
        'n_noise': result.n_noise,
        'silhouette': None,
    }}
    if result.n_groups < 2:
        return math.inf, details
    s_dbscan = silhouette(result.labels, X)
    details['dbscan']['silhouette'] = s_dbscan
    if seed is not None:
        rng = np.random.default_rng(seed)
    partition = kmeans(X, k, rng=rng, max_iter=max_iter, init=init)
    s_kmeans = _silhouette_or_none(partition.labels, X)
    details['kmeans'] = {
        'k': k,
        'labels': partition.labels.tolist(),
        'centroids': partition.centroids.tolist(),
        'inertia': partition.inertia,
        'silhouette': s_kmeans,
        'n_iter': partition.n_iter,
    }
    if s_kmeans is None:
        return math.inf, details
    difference = s_dbscan - s_kmeans
    if sign == 'absolute':
        return abs(difference), details
    return sign * difference, details


class DbscanComparisonFitness(ClusteringFitness):

    """
    **Description**

    Fitness built on `comparison_fitness`; subclasses fix the sign.

    **Arguments**

    * **k** (int, *optional*, default=3) - Number of k-means clusters.
    * **eps** (float, *optional*, default=0.1) - DBSCAN radius.
    * **min_points** (int, *optional*, default=5) - DBSCAN core point threshold.
    * **seed** (int, *optional*, default=None) - Fixed seed of the k-means initialisation.
    """

    sign = 1

    def __init__(self, k=3, eps=0.1, min_points=5, seed=None, max_iter=300, init='k-means++'):
        super(DbscanComparisonFitness, self).__init__(k=k, seed=seed, max_iter=max_iter, init=init)
        errors = []
        if isinstance(eps, bool) or not isinstance(eps, (int, float, np.number)) or not eps > 0:
            errors.append('fitness.params.eps: must be positive, got ' + repr(eps))
        if isinstance(min_points, bool) or not isinstance(min_points, (int, np.integer)) \
                or min_points < 1:
            errors.append('fitness.params.min_points: must be a positive integer, got '
                          + repr(min_points))
        if errors:
            raise ConfigurationError(errors)
        self.eps = float(eps)
        self.min_points = int(min_points)

    def params(self):
        params = super(DbscanComparisonFitness, self).params()
        params.update({'eps': self.eps, 'min_points': self.min_points})
        return params

    def score(self, X, rng):
        if self.seed is None and rng is None:
            rng = np.random.default_rng()
        return _compare(X, self.k, self.eps, self.min_points, self.seed, self.sign, rng,
                        self.max_iter, self.init)


class KMeansPreferableFitness(DbscanComparisonFitness):
    name = 'kmeans-vs-dbscan'
    sign = 1


class DbscanPreferableFitness(DbscanComparisonFitness):
    name = 'dbscan-vs-kmeans'
    sign = -1


class ClusteringGapFitness(DbscanComparisonFitness):
    name = 'kmeans-dbscan-gap'
    sign = 'absolute'


_FITNESSES = {
    'inertia': InertiaFitness,
    'silhouette-kmeans': SilhouetteFitness,
    'kmeans-vs-dbscan': KMeansPreferableFitness,
    'dbscan-vs-kmeans': DbscanPreferableFitness,
    'kmeans-dbscan-gap': ClusteringGapFitness,
}


def list_fitnesses():
    """
    **Description**

    Returns the names of the registered fitness functions.

    **Example**
    ~~~python
    for name in edo.clustering.list_fitnesses():
        fitness = edo.clustering.get_fitness(name)
    ~~~
    """
    return list(_FITNESSES.keys())


def get_fitness(name, **params):
    """
    **Description**

    Instantiates a registered fitness function.

    **Arguments**

    * **name** (str) - The fitness name. Full list in `list_fitnesses()`.
    * **params** - Keyword parameters of the fitness, e.g. `k`, `seed`, `eps`, `min_points`.

    **Example**
    ~~~python
    fitness = edo.clustering.get_fitness('kmeans-vs-dbscan', k=3, eps=0.1, min_points=5)
    ~~~
    """
    if name not in _FITNESSES:
        raise ConfigurationError('fitness.name: unknown fitness ' + repr(name) + ' (registered: '
                                 + ', '.join(list_fitnesses()) + ')')
    try:
        return _FITNESSES[name](**params)
    except TypeError as error:
        raise ConfigurationError('fitness.params: ' + str(error))

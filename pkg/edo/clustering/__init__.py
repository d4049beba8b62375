#!/usr/bin/env python3

r"""
Clustering algorithms and the fitness functions built on them.
"""

from .metrics import as_points, inertia, silhouette, silhouette_samples
from .kmeans import Partition, kmeans
from .dbscan import NOISE, DbscanResult, dbscan
from .fitness import (
    ClusteringFitness,
    InertiaFitness,
    SilhouetteFitness,
    DbscanComparisonFitness,
    KMeansPreferableFitness,
    DbscanPreferableFitness,
    ClusteringGapFitness,
    comparison_fitness,
    list_fitnesses,
    get_fitness,
)

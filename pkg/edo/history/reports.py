#!/usr/bin/env python3

import os
import logging

import numpy as np
import pandas as pd

from edo.utils import atomic_write, evaluation_rng
from edo.data.io import dataset_to_csv
from edo.clustering import list_fitnesses, get_fitness
from edo.geometry import convexity
from .archive import dump_json, load_generation, read_manifest
from .summary import representative_indices

logger = logging.getLogger(__name__)


def cluster_convexities(points, labels):
    """Convexity of each cluster of a 2-D dataset; noise points form one cluster."""
    points = np.asarray(points, dtype=float)
    labels = np.asarray(labels)
    return {int(label): convexity(points[labels == label]) for label in np.unique(labels)}


def _mean(values):
    values = list(values)
    return float(np.mean(values)) if values else None


def analyse_individual(individual, fitness, seed):
    """
    **Description**

    Re-evaluates an individual with a clustering fitness and describes the
    clusterings behind the value.

    **Return**

    * (dict) - The recomputed fitness, the clustering details and, for
        2-column datasets, the convexity of every cluster.
    """
    points = np.asarray(individual.dataset.values)
    value, details = fitness.evaluate(points, evaluation_rng(seed, points))
    analysis = {'recomputed_fitness': value}
    analysis.update(details)
    if points.shape[1] == 2:
        for method in ('kmeans', 'dbscan'):
            if method in analysis:
                convexities = cluster_convexities(points, analysis[method]['labels'])
                analysis[method]['convexity'] = {str(k): v for k, v in convexities.items()}
                analysis[method]['mean_convexity'] = _mean(convexities.values())
    return analysis


def representatives(root, epoch, out_dir):
    """
    **Description**

    Exports the best, median and worst individuals of an archived epoch.

    For each of them, `out_dir` receives the dataset (`<role>.csv`) and an
    analysis document (`<role>.json`) with its archived fitness and, when
    the run used a registered clustering fitness, its recomputed fitness,
    k-means labels, centroids, inertia and silhouette, DBSCAN labels, and the
    convexity of every cluster of 2-column datasets. `representatives.csv`
    tabulates the three.

    **Arguments**

    * **root** (str) - Archive root.
    * **epoch** (int) - Epoch to export.
    * **out_dir** (str) - Output directory.

    **Return**

    * (DataFrame) - The table written to `representatives.csv`.

    **Example**
    ~~~python
    table = representatives('out', epoch=200, out_dir='out/representatives')
    ~~~
    """
    manifest = read_manifest(root)
    record = load_generation(root, epoch, families=manifest.family_specs())
    fitness = None
    fitness_name = manifest.fitness.get('name')
    if fitness_name in list_fitnesses():
        fitness = get_fitness(fitness_name, **manifest.fitness.get('params', {}))
    else:
        logger.warning('fitness %s is not a registered clustering fitness, exporting datasets only',
                       fitness_name)
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    for role, index in representative_indices(record.fitnesses).items():
        individual = record.individuals[index]
        atomic_write(os.path.join(out_dir, role + '.csv'), dataset_to_csv(individual.dataset))
        document = {
            'role': role,
            'epoch': epoch,
            'individual_index': index,
            'fitness': float(record.fitnesses[index]),
            'n_rows': individual.dataset.n_rows,
            'n_cols': individual.dataset.n_cols,
            'metadata': [instance.to_dict() for instance in individual.metadata],
        }
        if fitness is not None:
            document.update(analyse_individual(individual, fitness, manifest.seed))
        atomic_write(os.path.join(out_dir, role + '.json'), dump_json(_json_safe(document)))
        row = {key: document[key] for key in ('role', 'individual_index', 'fitness', 'n_rows', 'n_cols')}
        row['recomputed_fitness'] = document.get('recomputed_fitness', np.nan)
        kmeans = document.get('kmeans', {})
        dbscan = document.get('dbscan', {})
        row['kmeans_inertia'] = kmeans.get('inertia')
        row['kmeans_silhouette'] = kmeans.get('silhouette')
        row['dbscan_silhouette'] = dbscan.get('silhouette')
        row['dbscan_n_clusters'] = dbscan.get('n_clusters')
        row['dbscan_n_noise'] = dbscan.get('n_noise')
        if individual.dataset.n_cols == 2:
            row['kmeans_convexity'] = kmeans.get('mean_convexity')
            row['dbscan_convexity'] = dbscan.get('mean_convexity')
        rows.append(row)
    table = pd.DataFrame(rows)
    atomic_write(os.path.join(out_dir, 'representatives.csv'), table.to_csv(index=False, lineterminator='\n'))
    return table


def _json_safe(value):
    """Replaces infinite floats, which JSON cannot represent, by the string 'inf'."""
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, float) and np.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return value

#!/usr/bin/env python3

import sys
import logging

import numpy as np
import pandas as pd
import tqdm

from edo.utils import ArchiveError
from edo.data.io import read_points, read_shape
from .archive import individual_paths, list_epochs, read_fitnesses

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = [
    'epoch',
    'n_individuals',
    'n_infinite',
    'best',
    'q1',
    'median',
    'q3',
    'worst',
    'rows_min',
    'rows_median',
    'rows_max',
    'cols_min',
    'cols_median',
    'cols_max',
    'best_index',
    'median_index',
    'worst_index',
]


def _sampled_epochs(root, interval):
    epochs = list_epochs(root)
    if not epochs:
        raise ArchiveError('the archive at ' + str(root) + ' holds no complete epoch')
    if interval is not None:
        if int(interval) != interval or interval < 1:
            raise ValueError('interval must be a positive integer, got ' + repr(interval))
        epochs = [e for e in epochs if e % interval == 0]
    return epochs


def _progress(iterable, desc):
    return tqdm.tqdm(iterable, desc=desc, leave=False, disable=not sys.stderr.isatty())


def representative_indices(fitnesses):
    """Population indices of the best, median and worst individuals; ties keep population order."""
    order = np.argsort(np.asarray(fitnesses, dtype=float), kind='stable')
    return {
        'best': int(order[0]),
        'median': int(order[(len(order) - 1) // 2]),
        'worst': int(order[-1]),
    }


def summarise_epoch(root, epoch):
    fitnesses = read_fitnesses(root, epoch)
    shapes = np.array([read_shape(individual_paths(root, epoch, i)[0]) for i in range(len(fitnesses))])
    finite = fitnesses[np.isfinite(fitnesses)]
    row = {
        'epoch': epoch,
        'n_individuals': len(fitnesses),
        'n_infinite': int(len(fitnesses) - len(finite)),
    }
    if len(finite):
        q1, median, q3 = np.percentile(finite, [25, 50, 75])
        row.update(best=finite.min(), q1=q1, median=median, q3=q3, worst=finite.max())
    else:
        row.update(best=np.nan, q1=np.nan, median=np.nan, q3=np.nan, worst=np.nan)
    for name, column in (('rows', 0), ('cols', 1)):
        row[name + '_min'] = int(shapes[:, column].min())
        row[name + '_median'] = float(np.median(shapes[:, column]))
        row[name + '_max'] = int(shapes[:, column].max())
    for role, index in representative_indices(fitnesses).items():
        row[role + '_index'] = index
    return row


def summarise(root, interval=None):
    """
    **Description**

    Tabulates the progression of an archived run, one row per epoch.

    Fitness quantiles are taken over the finite values; infinite values are
    only counted, and an epoch without finite values has empty quantiles.
    Shapes are read from the dataset files. The `*_index` columns point to
    the best, median and worst individuals of each epoch.

    **Arguments**

    * **root** (str) - Archive root.
    * **interval** (int, *optional*, default=None) - Only summarise epochs
        that are multiples of `interval`.

    **Return**

    * (DataFrame) - The progression table.

    **Example**
    ~~~python
    table = summarise('out', interval=100)
    table[['epoch', 'best', 'rows_median']]
    ~~~
    """
    epochs = _sampled_epochs(root, interval)
    rows = [summarise_epoch(root, epoch) for epoch in _progress(epochs, 'summarise')]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def coverage(root, interval=50):
    """
    **Description**

    Collects every point of every individual at the epochs that are
    multiples of `interval`, for scatter plots of the explored space.

    Only archives of 2-column datasets are supported.

    **Arguments**

    * **root** (str) - Archive root.
    * **interval** (int, *optional*, default=50) - Epoch interval.

    **Return**

    * (DataFrame) - Columns `epoch, individual, x, y`.
    """
    frames = []
    for epoch in _progress(_sampled_epochs(root, interval), 'coverage'):
        n_individuals = len(read_fitnesses(root, epoch))
        for index in range(n_individuals):
            csv_path = individual_paths(root, epoch, index)[0]
            points = read_points(csv_path)
            if points.shape[1] != 2:
                raise ArchiveError('coverage needs 2-column datasets, but ' + csv_path + ' has '
                                   + str(points.shape[1]) + ' columns')
            frames.append(pd.DataFrame({
                'epoch': epoch,
                'individual': index,
                'x': points[:, 0],
                'y': points[:, 1],
            }))
    if not frames:
        return pd.DataFrame(columns=['epoch', 'individual', 'x', 'y'])
    return pd.concat(frames, ignore_index=True)

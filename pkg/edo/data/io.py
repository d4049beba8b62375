#!/usr/bin/env python3

"""
Reading and writing individuals: one CSV per dataset and one JSON document per
metadata list.
"""

import io
import json

import numpy as np
import pandas as pd

from edo.utils import atomic_write
from edo.distributions import DistributionInstance
from .individual import Dataset, Individual


def dataset_to_csv(dataset):
    """
    Renders a dataset as CSV text with a `c0,c1,...` header.

    Values use the shortest decimal representation that parses back to the
    same double.
    """
    return dataset.to_frame().to_csv(index=False, lineterminator='\n')


def dataset_from_csv(source):
    """Parses CSV text or a CSV path written by `dataset_to_csv`."""
    if isinstance(source, str) and '\n' in source:
        source = io.StringIO(source)
    frame = pd.read_csv(source, float_precision='round_trip', dtype=float)
    expected = ['c' + str(j) for j in range(frame.shape[1])]
    if list(frame.columns) != expected:
        raise ValueError('unexpected dataset header ' + str(list(frame.columns)))
    return Dataset(frame.to_numpy(dtype=float))


def metadata_to_json(metadata):
    document = {'columns': [instance.to_dict() for instance in metadata]}
    return json.dumps(document, indent=2, sort_keys=True) + '\n'


def metadata_from_json(text, resolve_subtype):
    """
    **Description**

    Rebuilds a metadata list from its JSON document.

    **Arguments**

    * **text** (str) - The JSON document.
    * **resolve_subtype** (callable) - Maps `(family_name, subtype_id)` to a `Subtype`.

    **Return**

    * (list) - One `DistributionInstance` per column.
    """
    document = json.loads(text)
    metadata = []
    for column in document['columns']:
        subtype = resolve_subtype(column['family'], int(column['subtype_id']))
        values = [column['parameters'][name] for name in subtype.family.parameter_names]
        metadata.append(DistributionInstance(subtype, values))
    return metadata


def write_individual(individual, csv_path, meta_path):
    atomic_write(csv_path, dataset_to_csv(individual.dataset))
    atomic_write(meta_path, metadata_to_json(individual.metadata))


def read_individual(csv_path, meta_path, resolve_subtype):
    dataset = dataset_from_csv(csv_path)
    with open(meta_path, 'r') as meta_file:
        metadata = metadata_from_json(meta_file.read(), resolve_subtype)
    return Individual(dataset, metadata)


def read_shape(csv_path):
    """Returns `(n_rows, n_cols)` of a dataset CSV without parsing its values."""
    with open(csv_path, 'r') as csv_file:
        header = csv_file.readline()
        n_rows = sum(1 for line in csv_file if line.strip())
    n_cols = len(header.strip().split(','))
    return n_rows, n_cols


def read_points(csv_path):
    """Returns the values of a dataset CSV as an array."""
    return np.asarray(dataset_from_csv(csv_path).values)

#!/usr/bin/env python3

r"""
Datasets, individuals and the limits on their shape.

An individual is a dataset together with its metadata: the distribution
instance that generated each column.
"""

from .limits import RowLimits, ColumnLimits
from .individual import (
    Dataset,
    Individual,
    fill_column,
    assign_families,
    create_individual,
)
from .io import (
    dataset_to_csv,
    dataset_from_csv,
    metadata_to_json,
    metadata_from_json,
    write_individual,
    read_individual,
)

#!/usr/bin/env python3

import collections

import numpy as np
import pandas as pd


class Dataset(object):

    """
    **Description**

    A rectangular, real-valued dataset stored column-major.

    The underlying array is read-only; operators build new datasets instead
    of editing existing ones.

    **Arguments**

    * **values** (array) - A 2-D array of shape `(n_rows, n_cols)`.
    """

    def __init__(self, values):
        values = np.array(values, dtype=float, order='F', copy=True)
        if values.ndim != 2:
            raise ValueError('a dataset must be 2-dimensional, got shape ' + str(values.shape))
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise ValueError('a dataset needs at least one row and one column, got shape '
                             + str(values.shape))
        values.setflags(write=False)
        self.values = values

    @classmethod
    def from_columns(cls, columns):
        return cls(np.column_stack([np.asarray(c, dtype=float) for c in columns]))

    @property
    def n_rows(self):
        return self.values.shape[0]

    @property
    def n_cols(self):
        return self.values.shape[1]

    @property
    def shape(self):
        return self.values.shape

    def column(self, index):
        return self.values[:, index]

    def columns(self):
        return [self.values[:, j] for j in range(self.n_cols)]

    def column_names(self):
        return ['c' + str(j) for j in range(self.n_cols)]

    def to_frame(self):
        return pd.DataFrame(np.array(self.values), columns=self.column_names())

    def __eq__(self, other):
        return isinstance(other, Dataset) and np.array_equal(self.values, other.values)

    def __repr__(self):
        return 'Dataset(' + str(self.n_rows) + 'x' + str(self.n_cols) + ')'


class Individual(object):

    """
    **Description**

    A candidate solution: a dataset together with the distribution instance
    that generated each of its columns.

    **Arguments**

    * **dataset** (Dataset) - The data.
    * **metadata** (list) - One `DistributionInstance` per column.
    """

    def __init__(self, dataset, metadata):
        metadata = tuple(metadata)
        if len(metadata) != dataset.n_cols:
            raise ValueError('expected one metadata entry per column: '
                             + str(len(metadata)) + ' entries for ' + str(dataset.n_cols) + ' columns')
        self.dataset = dataset
        self.metadata = metadata

    @property
    def shape(self):
        return self.dataset.shape

    def family_counts(self):
        return collections.Counter(instance.family.name for instance in self.metadata)

    def __eq__(self, other):
        return (isinstance(other, Individual)
                and self.dataset == other.dataset
                and self.metadata == other.metadata)

    def __repr__(self):
        return 'Individual(' + repr(self.dataset) + ', ' + repr(list(self.metadata)) + ')'


def fill_column(instance, n_rows, rng):
    """
    **Description**

    Draws `n_rows` independent values from a distribution instance.

    **Arguments**

    * **instance** (DistributionInstance) - The column's metadata.
    * **n_rows** (int) - Number of values, at least 1.
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (array) - The new column.
    """
    if n_rows < 1:
        raise ValueError('a column needs at least one row, got ' + str(n_rows))
    return np.asarray(instance.sample(rng, size=int(n_rows)), dtype=float)


def assign_families(n_cols, col_limits, space, rng):
    """
    **Description**

    Chooses the family of each of `n_cols` columns.

    Per-family minima are filled first; the remaining columns are drawn by
    weight among the families that have not reached their maximum. The
    assignment is shuffled so mandatory columns do not always come first.

    **Return**

    * (list) - One `FamilySpec` per column.
    """
    assignment = []
    counts = collections.Counter()
    for family in space.families:
        lo, _ = col_limits.family_bounds(family.name)
        assignment.extend([family] * lo)
        counts[family.name] += lo
    assert len(assignment) <= n_cols, 'per-family minima exceed the column count'
    while len(assignment) < n_cols:
        allowed = set()
        for family in space.families:
            _, hi = col_limits.family_bounds(family.name)
            if hi is None or counts[family.name] < hi:
                allowed.add(family.name)
        family = space.choose_family(rng, allowed=allowed)
        assert family is not None, 'no family can take another column'
        assignment.append(family)
        counts[family.name] += 1
    order = rng.permutation(len(assignment))
    return [assignment[i] for i in order]


def create_individual(row_limits, col_limits, space, rng):
    """
    **Description**

    Creates a new individual from scratch.

    The number of rows is uniform on the row limits and the number of columns
    uniform on the feasible column range. Each column picks a family, a
    subtype of that family and a fresh instance of the subtype, and is filled
    by sampling from that instance.

    **Arguments**

    * **row_limits** (RowLimits) - Bounds on the number of rows.
    * **col_limits** (ColumnLimits) - Bounds on the number of columns.
    * **space** (SearchSpace) - Families, weights and subtype pools.
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (Individual) - The new individual.

    **Example**
    ~~~python
    space = SearchSpace([get_family('uniform')])
    individual = create_individual(RowLimits(3, 100), ColumnLimits(2, 2), space, rng)
    ~~~
    """
    lowest, highest = col_limits.feasible_range(space.families, space.weights)
    n_rows = row_limits.sample(rng)
    n_cols = int(rng.integers(lowest, highest + 1))
    metadata = []
    columns = []
    for family in assign_families(n_cols, col_limits, space, rng):
        instance = space.new_instance(family, rng)
        metadata.append(instance)
        columns.append(fill_column(instance, n_rows, rng))
    return Individual(Dataset.from_columns(columns), metadata)

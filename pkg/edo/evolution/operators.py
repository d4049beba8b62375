#!/usr/bin/env python3

"""
Crossover and mutation of individuals.
"""

import collections

import numpy as np

from edo.data import Dataset, Individual, fill_column


def _same_column(values_a, instance_a, values_b, instance_b):
    return instance_a == instance_b and np.array_equal(values_a, values_b)


def _column_pool(parent_a, parent_b):
    pool = [(parent_a.dataset.column(j), instance) for j, instance in enumerate(parent_a.metadata)]
    for j, instance in enumerate(parent_b.metadata):
        values = parent_b.dataset.column(j)
        if j < parent_a.dataset.n_cols and _same_column(values, instance, *pool[j]):
            continue
        pool.append((values, instance))
    return pool


def _choose_columns(pool, n_cols, col_limits, rng):
    order = rng.permutation(len(pool))
    if col_limits is None:
        return sorted(int(i) for i in order[:n_cols])
    chosen = []
    counts = collections.Counter()
    for i in order:
        name = pool[i][1].family.name
        lo, _ = col_limits.family_bounds(name)
        if counts[name] < lo:
            chosen.append(int(i))
            counts[name] += 1
    for i in order:
        if len(chosen) == n_cols:
            break
        if int(i) in chosen:
            continue
        name = pool[i][1].family.name
        _, hi = col_limits.family_bounds(name)
        if hi is None or counts[name] < hi:
            chosen.append(int(i))
            counts[name] += 1
    assert len(chosen) == n_cols, 'column pool cannot satisfy the per-family limits'
    return sorted(chosen)


def _resize(values, instance, n_rows, rng):
    length = len(values)
    if length > n_rows:
        keep = np.sort(rng.choice(length, size=n_rows, replace=False))
        return np.asarray(values)[keep]
    if length < n_rows:
        return np.concatenate([values, fill_column(instance, n_rows - length, rng)])
    return np.array(values)


def crossover(parent_a, parent_b, rng, col_limits=None):
    """
    **Description**

    Creates an offspring from two parents.

    The offspring takes its number of rows from one parent and its number of
    columns from one parent, each with probability 1/2. Its columns are drawn
    without replacement from the pooled columns of both parents, along with
    their metadata; a column of `parent_b` identical to the same column of
    `parent_a` only enters the pool once. Columns that are too long lose
    randomly chosen entries; columns that are too short are extended by
    sampling from their own metadata.

    **Arguments**

    * **parent_a** (Individual) - First parent.
    * **parent_b** (Individual) - Second parent.
    * **rng** (Generator) - Source of randomness.
    * **col_limits** (ColumnLimits, *optional*, default=None) - When given,
        the chosen columns respect the per-family limits.

    **Return**

    * (Individual) - The offspring.

    **Example**
    ~~~python
    child = crossover(parents[0], parents[1], rng)
    ~~~
    """
    n_rows = (parent_a.dataset.n_rows, parent_b.dataset.n_rows)[rng.integers(2)]
    n_cols = (parent_a.dataset.n_cols, parent_b.dataset.n_cols)[rng.integers(2)]
    pool = _column_pool(parent_a, parent_b)
    columns = []
    metadata = []
    for i in _choose_columns(pool, n_cols, col_limits, rng):
        values, instance = pool[i]
        columns.append(_resize(values, instance, n_rows, rng))
        metadata.append(instance)
    return Individual(Dataset.from_columns(columns), metadata)


def _add_row(columns, metadata, rng):
    return [np.append(values, instance.sample(rng)) for values, instance in zip(columns, metadata)]


def _remove_row(columns, rng):
    row = rng.integers(len(columns[0]))
    return [np.delete(values, row) for values in columns]


def _add_column(columns, metadata, col_limits, space, rng):
    counts = collections.Counter(instance.family.name for instance in metadata)
    allowed = set()
    for family in space.families:
        _, hi = col_limits.family_bounds(family.name)
        if hi is None or counts[family.name] < hi:
            allowed.add(family.name)
    family = space.choose_family(rng, allowed=allowed)
    if family is None:
        return columns, metadata
    instance = space.new_instance(family, rng)
    values = fill_column(instance, len(columns[0]), rng)
    return columns + [values], metadata + [instance]


def _remove_column(columns, metadata, col_limits, rng):
    counts = collections.Counter(instance.family.name for instance in metadata)
    candidates = [j for j, instance in enumerate(metadata)
                  if counts[instance.family.name] > col_limits.family_bounds(instance.family.name)[0]]
    if not candidates:
        return columns, metadata
    j = candidates[rng.integers(len(candidates))]
    return columns[:j] + columns[j + 1:], metadata[:j] + metadata[j + 1:]


def _mutate_parameters(metadata, mutation_prob, rng):
    mutated = []
    for instance in metadata:
        for k, (lower, upper) in enumerate(instance.subtype.current_limits):
            if rng.random() < mutation_prob:
                instance = instance.replace(k, rng.uniform(lower, upper))
        mutated.append(instance)
    return mutated


def _mutate_entries(columns, metadata, mutation_prob, rng):
    mask = rng.random((len(columns[0]), len(columns))) < mutation_prob
    mutated = []
    for j, (values, instance) in enumerate(zip(columns, metadata)):
        hits = mask[:, j]
        if hits.any():
            values = np.array(values)
            values[hits] = instance.sample(rng, size=int(hits.sum()))
        mutated.append(values)
    return mutated


def mutate(individual, mutation_prob, row_limits, col_limits, space, rng):
    """
    **Description**

    Mutates an individual, returning a new one.

    The steps run in order, each on the result of the previous one and each
    with probability `mutation_prob`:

    1. append a row sampled from the column metadata, if the row limits allow;
    2. delete a uniformly chosen row, if the row limits allow;
    3. append a new column with fresh metadata, if the column limits allow;
    4. delete a uniformly chosen column and its metadata, if the column
        limits allow;
    5. resample each metadata parameter within its subtype's current limits;
    6. resample each entry from its column's (possibly updated) metadata.

    **Arguments**

    * **individual** (Individual) - The individual to mutate.
    * **mutation_prob** (float) - Probability `p_m` of each mutation.
    * **row_limits** (RowLimits) - Bounds on the number of rows.
    * **col_limits** (ColumnLimits) - Bounds on the number of columns.
    * **space** (SearchSpace) - Families, weights and subtype pools.
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (Individual) - The mutated individual.
    """
    columns = individual.dataset.columns()
    metadata = list(individual.metadata)

    n_rows = len(columns[0])
    if rng.random() < mutation_prob and n_rows + 1 <= row_limits.r_max:
        columns = _add_row(columns, metadata, rng)

    n_rows = len(columns[0])
    if rng.random() < mutation_prob and n_rows - 1 >= row_limits.r_min:
        columns = _remove_row(columns, rng)

    if rng.random() < mutation_prob and len(columns) + 1 <= col_limits.c_max:
        columns, metadata = _add_column(columns, metadata, col_limits, space, rng)

    if rng.random() < mutation_prob and len(columns) - 1 >= col_limits.c_min:
        columns, metadata = _remove_column(columns, metadata, col_limits, rng)

    metadata = _mutate_parameters(metadata, mutation_prob, rng)
    columns = _mutate_entries(columns, metadata, mutation_prob, rng)
    return Individual(Dataset.from_columns(columns), metadata)

#!/usr/bin/env python3

import numpy as np

from .config import proportion_count


def select_indices(fitnesses, best_prop, lucky_prop, rng):
    """
    **Description**

    Truncation selection with optional lucky parents.

    The `ceil(b N)` individuals with the lowest fitness are selected first,
    ties going to the lower population index. Then `ceil(l N)` individuals are
    drawn uniformly without replacement from the rest, or all of them if fewer
    remain.

    **Arguments**

    * **fitnesses** (array) - Fitness of every individual; lower is better.
    * **best_prop** (float) - Proportion `b` in (0, 1].
    * **lucky_prop** (float) - Proportion `l` in [0, 1].
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (list) - Population indices of the parents, fittest block first.
    """
    fitnesses = np.asarray(fitnesses, dtype=float)
    size = len(fitnesses)
    n_best = min(proportion_count(best_prop, size), size)
    n_lucky = proportion_count(lucky_prop, size)
    assert n_best >= 1, 'selection needs at least one parent'
    order = np.argsort(fitnesses, kind='stable')
    best = [int(i) for i in order[:n_best]]
    remainder = np.sort(order[n_best:])
    n_draw = min(n_lucky, len(remainder))
    lucky = []
    if n_draw > 0:
        lucky = [int(i) for i in rng.choice(remainder, size=n_draw, replace=False)]
    return best + lucky


def select_parents(population, best_prop, lucky_prop, rng):
    """
    **Description**

    Selects the parents of the next generation from a `Population`.

    **Return**

    * (tuple) - The parent individuals and their fitnesses.

    **Example**
    ~~~python
    parents, fitnesses = select_parents(population, best_prop=0.2, lucky_prop=0.0, rng=rng)
    ~~~
    """
    indices = select_indices(population.fitnesses, best_prop, lucky_prop, rng)
    parents = [population.individuals[i] for i in indices]
    return parents, population.fitnesses[indices]


def prune_subtypes(parents, space):
    """Retires the subtypes of `space` that no parent column uses."""
    return space.prune(parents)

#!/usr/bin/env python3

import dataclasses

import numpy as np

from edo.utils import ConfigurationError
from edo.data import RowLimits, ColumnLimits


def proportion_count(proportion, size):
    """
    Returns `ceil(proportion * size)`.

    The product is rounded first so that e.g. `0.3 * 10` counts 3 and not 4.
    """
    return int(np.ceil(np.round(proportion * size, 9)))


def describe_hook(hook):
    if hook is None:
        return None
    if hasattr(hook, 'to_dict'):
        return hook.to_dict()
    name = getattr(hook, '__qualname__', None) or type(hook).__name__
    return {'name': name}


@dataclasses.dataclass
class EdoConfig(object):

    """
    **Description**

    The full parameter set of an EDO run.

    **Arguments**

    * **size** (int) - Population size `N`.
    * **row_limits** (RowLimits) - Bounds on the number of rows.
    * **col_limits** (ColumnLimits) - Bounds on the number of columns.
    * **families** (list) - `FamilySpec`s the columns are drawn from.
    * **weights** (list, *optional*, default=None) - Sampling weights of the
        families; uniform when omitted.
    * **max_iter** (int, *optional*, default=100) - Maximum number of epochs `M`.
    * **best_prop** (float, *optional*, default=0.25) - Proportion `b` of the
        fittest individuals kept as parents.
    * **lucky_prop** (float, *optional*, default=0.0) - Proportion `l` of
        parents drawn at random from the remaining individuals.
    * **mutation_prob** (float, *optional*, default=0.01) - Mutation probability `p_m`.
    * **shrinkage** (float, *optional*, default=None) - Shrink factor `s`;
        limits are not shrunk when None.
    * **seed** (int, *optional*, default=0) - Seed of the run.
    * **stop** (callable, *optional*, default=None) - Called as
        `stop(epoch, history)` before each new epoch; the run ends when it
        returns True.
    * **mutation_schedule** (callable, *optional*, default=None) - Called as
        `mutation_schedule(epoch, history)` after each epoch; returns the
        mutation probability of the next epoch.

    **Example**
    ~~~python
    config = EdoConfig(size=100,
                       row_limits=RowLimits(3, 100),
                       col_limits=ColumnLimits(2, 2),
                       families=[get_family('uniform')],
                       max_iter=100,
                       best_prop=0.2)
    config.validate()
    ~~~
    """

    size: int
    row_limits: RowLimits
    col_limits: ColumnLimits
    families: list
    weights: list = None
    max_iter: int = 100
    best_prop: float = 0.25
    lucky_prop: float = 0.0
    mutation_prob: float = 0.01
    shrinkage: float = None
    seed: int = 0
    stop: object = None
    mutation_schedule: object = None

    @property
    def family_weights(self):
        if self.weights is None:
            return np.ones(len(self.families))
        return np.asarray(self.weights, dtype=float)

    @property
    def n_best(self):
        return proportion_count(self.best_prop, self.size)

    @property
    def n_lucky(self):
        return proportion_count(self.lucky_prop, self.size)

    def validate(self):
        """
        Checks every parameter and raises a `ConfigurationError` listing all
        offending fields.
        """
        errors = []

        def is_integer(value):
            return not isinstance(value, bool) and isinstance(value, (int, np.integer))

        def in_unit_interval(value):
            return isinstance(value, (int, float, np.number)) and 0.0 <= value <= 1.0

        if not is_integer(self.size) or self.size < 1:
            errors.append('size: must be a positive integer, got ' + repr(self.size))
        if not is_integer(self.max_iter) or self.max_iter < 0:
            errors.append('max_iter: must be a non-negative integer, got ' + repr(self.max_iter))
        if not is_integer(self.seed):
            errors.append('seed: must be an integer, got ' + repr(self.seed))
        if not isinstance(self.row_limits, RowLimits):
            errors.append('row_limits: expected RowLimits')
        if not isinstance(self.col_limits, ColumnLimits):
            errors.append('col_limits: expected ColumnLimits')
        if not in_unit_interval(self.best_prop) or self.best_prop <= 0:
            errors.append('best_prop: must lie in (0, 1], got ' + repr(self.best_prop))
        if not in_unit_interval(self.lucky_prop):
            errors.append('lucky_prop: must lie in [0, 1], got ' + repr(self.lucky_prop))
        if not in_unit_interval(self.mutation_prob):
            errors.append('mutation_prob: must lie in [0, 1], got ' + repr(self.mutation_prob))
        if self.shrinkage is not None and not in_unit_interval(self.shrinkage):
            errors.append('shrinkage: must lie in [0, 1], got ' + repr(self.shrinkage))
        if self.stop is not None and not callable(self.stop):
            errors.append('stop: must be callable')
        if self.mutation_schedule is not None and not callable(self.mutation_schedule):
            errors.append('mutation_schedule: must be callable')
        if not self.families:
            errors.append('families: at least one family is required')
        else:
            weights = self.family_weights
            if weights.shape != (len(self.families), ):
                errors.append('weights: expected ' + str(len(self.families))
                              + ' entries, got ' + str(weights.size))
            elif np.any(weights < 0) or not np.isfinite(weights).all() or weights.sum() <= 0:
                errors.append('weights: entries must be non-negative with a positive sum')
            elif isinstance(self.col_limits, ColumnLimits):
                try:
                    self.col_limits.feasible_range(self.families, weights)
                except ConfigurationError as error:
                    errors.extend(error.errors)
        if not errors and self.n_best + self.n_lucky > self.size:
            errors.append('best_prop, lucky_prop: ceil(b N) + ceil(l N) = '
                          + str(self.n_best + self.n_lucky)
                          + ' exceeds the population size ' + str(self.size))
        if errors:
            raise ConfigurationError(errors)
        return self

    def to_dict(self):
        weights = self.family_weights.tolist() if self.families else []
        families = []
        for family, weight in zip(self.families, weights):
            entry = family.to_dict()
            entry['weight'] = weight
            families.append(entry)
        return {
            'size': self.size,
            'row_limits': self.row_limits.to_list(),
            'col_limits': self.col_limits.to_dict(),
            'families': families,
            'max_iter': self.max_iter,
            'best_prop': self.best_prop,
            'lucky_prop': self.lucky_prop,
            'mutation_prob': self.mutation_prob,
            'shrinkage': self.shrinkage,
            'seed': self.seed,
            'stop': describe_hook(self.stop),
            'mutation_schedule': describe_hook(self.mutation_schedule),
        }


@dataclasses.dataclass
class Population(object):

    """
    **Description**

    A generation: individuals and their fitnesses, index-aligned.
    """

    individuals: list
    fitnesses: np.ndarray

    def __post_init__(self):
        self.individuals = list(self.individuals)
        self.fitnesses = np.asarray(self.fitnesses, dtype=float)
        if len(self.individuals) != len(self.fitnesses):
            raise ValueError('expected one fitness per individual: ' + str(len(self.fitnesses))
                             + ' fitnesses for ' + str(len(self.individuals)) + ' individuals')

    def __len__(self):
        return len(self.individuals)

    def order(self):
        """Indices from fittest to least fit; ties keep population order."""
        return np.argsort(self.fitnesses, kind='stable')

    def best(self):
        index = int(self.order()[0])
        return self.individuals[index], float(self.fitnesses[index])

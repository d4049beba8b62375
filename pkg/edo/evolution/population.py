#!/usr/bin/env python3

import logging
import math

import numpy as np

from edo.utils import FitnessError, evaluation_rng
from edo.data import create_individual
from .operators import crossover, mutate

logger = logging.getLogger(__name__)


def create_initial_population(config, space, rng):
    """Creates `config.size` individuals from scratch."""
    return [create_individual(config.row_limits, config.col_limits, space, rng)
            for _ in range(config.size)]


def create_new_population(parents, config, space, rng, mutation_prob=None):
    """
    **Description**

    Creates the next generation from a list of parents.

    The parents are carried over unchanged. Every remaining slot is filled by
    the crossover of two parents, drawn uniformly with replacement, followed
    by a mutation of the offspring.

    **Arguments**

    * **parents** (list) - Between 1 and `config.size` individuals.
    * **config** (EdoConfig) - Parameters of the run.
    * **space** (SearchSpace) - Families, weights and subtype pools.
    * **rng** (Generator) - Source of randomness.
    * **mutation_prob** (float, *optional*, default=None) - Overrides
        `config.mutation_prob`.

    **Return**

    * (list) - The `config.size` individuals of the new generation, parents first.
    """
    assert 1 <= len(parents) <= config.size, 'expected between 1 and N parents'
    if mutation_prob is None:
        mutation_prob = config.mutation_prob
    population = list(parents)
    while len(population) < config.size:
        i, j = rng.integers(len(parents), size=2)
        child = crossover(parents[i], parents[j], rng, col_limits=config.col_limits)
        child = mutate(child, mutation_prob, config.row_limits, config.col_limits, space, rng)
        population.append(child)
    return population


def _coerce(value, epoch, index):
    value = float(value)
    if math.isnan(value):
        logger.warning('fitness of individual %d in epoch %d is NaN, recorded as inf', index, epoch)
        return math.inf
    return value


def _evaluate_one(task):
    fitness, individual, seed = task
    try:
        return float(fitness(individual, evaluation_rng(seed, individual.dataset.values))), None
    except Exception as error:
        return None, repr(error)


def evaluate_population(individuals, fitness, seed, epoch, pool=None, offset=0):
    """
    **Description**

    Evaluates the fitness of a list of individuals.

    Each evaluation receives its own random generator derived from the seed
    and the dataset, so the values do not depend on whether `pool` is used.
    NaN values are recorded as `inf`.

    **Arguments**

    * **individuals** (list) - The individuals to evaluate.
    * **fitness** (callable) - Called as `fitness(individual, rng)`.
    * **seed** (int) - The run seed.
    * **epoch** (int) - The current epoch, for error reports.
    * **pool** (multiprocessing.Pool, *optional*, default=None) - Evaluates in
        parallel when given; `fitness` must then be picklable.
    * **offset** (int, *optional*, default=0) - Population index of the first
        individual, for error reports.

    **Return**

    * (array) - One fitness value per individual.
    """
    values = []
    if pool is None:
        for index, individual in enumerate(individuals, offset):
            try:
                value = fitness(individual, evaluation_rng(seed, individual.dataset.values))
            except Exception as error:
                raise FitnessError(epoch, index, error) from error
            values.append(_coerce(value, epoch, index))
    else:
        tasks = [(fitness, individual, seed) for individual in individuals]
        for index, (value, error) in enumerate(pool.map(_evaluate_one, tasks), offset):
            if error is not None:
                raise FitnessError(epoch, index, error)
            values.append(_coerce(value, epoch, index))
    return np.asarray(values, dtype=float)

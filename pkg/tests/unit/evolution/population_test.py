#!/usr/bin/env python3

import multiprocessing
import unittest

import numpy as np

from edo.utils import FitnessError
from edo.data import ColumnLimits, RowLimits
from edo.distributions import get_family
from edo.evolution import (
    EdoConfig,
    create_initial_population,
    create_new_population,
    evaluate_population,
)

from ..util_individuals import (
    constant_individual,
    failing_fitness,
    mean_fitness,
    nan_fitness,
    noisy_fitness,
    uniform_space,
)


def small_config(**kwargs):
    params = dict(size=100,
                  row_limits=RowLimits(3, 10),
                  col_limits=ColumnLimits(1, 3),
                  families=[get_family('uniform')],
                  best_prop=0.2,
                  mutation_prob=0.05)
    params.update(kwargs)
    return EdoConfig(**params)


class TestPopulation(unittest.TestCase):

    def setUp(self):
        self.space = uniform_space()
        self.rng = np.random.default_rng(0)

    def test_initial_population(self):
        config = small_config(size=12)
        population = create_initial_population(config, self.space, self.rng)
        self.assertEqual(len(population), 12)
        for individual in population:
            self.assertTrue(config.row_limits.contains(individual.dataset.n_rows))

    def test_full_parent_set(self):
        config = small_config(size=10)
        parents = create_initial_population(config, self.space, self.rng)
        population = create_new_population(parents, config, self.space, self.rng)
        self.assertEqual(len(population), 10)
        for parent, individual in zip(parents, population):
            self.assertIs(parent, individual)

    def test_parents_carried_over(self):
        config = small_config()
        parents = create_initial_population(small_config(size=20), self.space, self.rng)
        population = create_new_population(parents, config, self.space, self.rng)
        self.assertEqual(len(population), 100)
        for parent, individual in zip(parents, population[:20]):
            self.assertIs(parent, individual)
        for individual in population[20:]:
            n_rows, n_cols = individual.shape
            self.assertTrue(3 <= n_rows <= 10)
            self.assertTrue(1 <= n_cols <= 3)

    def test_single_parent_without_mutation(self):
        config = small_config(size=8, mutation_prob=0.0)
        parent = constant_individual(4, [0.3, 0.6])
        population = create_new_population([parent], config, self.space, self.rng)
        self.assertEqual(len(population), 8)
        for individual in population:
            self.assertEqual(individual, parent)

    def test_mutation_override(self):
        config = small_config(size=8, mutation_prob=0.0)
        parent = constant_individual(4, [0.3, 0.6], subtype=self.space.pools['uniform'].fresh())
        population = create_new_population([parent], config, self.space, self.rng, mutation_prob=1.0)
        for individual in population[1:]:
            self.assertNotEqual(individual, parent)

    def test_evaluation(self):
        individuals = [constant_individual(3, [v]) for v in (0.1, 0.5, 0.9)]
        fitnesses = evaluate_population(individuals, mean_fitness, seed=0, epoch=0)
        self.assertTrue(np.allclose(fitnesses, [0.1, 0.5, 0.9]))

    def test_nan_recorded_as_inf(self):
        individuals = [constant_individual(3, [0.5])]
        with self.assertLogs('edo.evolution.population', level='WARNING'):
            fitnesses = evaluate_population(individuals, nan_fitness, seed=0, epoch=2)
        self.assertEqual(fitnesses[0], np.inf)

    def test_fitness_error(self):
        individuals = [constant_individual(3, [0.5])] * 2
        with self.assertRaises(FitnessError) as context:
            evaluate_population(individuals, failing_fitness, seed=0, epoch=3, offset=5)
        self.assertEqual(context.exception.epoch, 3)
        self.assertEqual(context.exception.index, 5)
        self.assertIsInstance(context.exception.__cause__, RuntimeError)

    def test_rng_depends_on_content(self):
        individuals = [constant_individual(3, [0.5]), constant_individual(3, [0.5]),
                       constant_individual(3, [0.7])]
        fitnesses = evaluate_population(individuals, noisy_fitness, seed=1, epoch=0)
        self.assertEqual(fitnesses[0], fitnesses[1])
        self.assertNotEqual(fitnesses[0] - 0.5, fitnesses[2] - 0.7)
        other_seed = evaluate_population(individuals, noisy_fitness, seed=2, epoch=0)
        self.assertNotEqual(fitnesses[0], other_seed[0])

    def test_parallel_matches_serial(self):
        config = small_config(size=16)
        individuals = create_initial_population(config, self.space, self.rng)
        serial = evaluate_population(individuals, noisy_fitness, seed=3, epoch=0)
        with multiprocessing.Pool(2) as pool:
            parallel = evaluate_population(individuals, noisy_fitness, seed=3, epoch=0, pool=pool)
            with self.assertRaises(FitnessError):
                evaluate_population(individuals, failing_fitness, seed=3, epoch=0, pool=pool)
        self.assertTrue(np.array_equal(serial, parallel))


if __name__ == '__main__':
    unittest.main()

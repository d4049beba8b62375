#!/usr/bin/env python3

import unittest

import numpy as np

from edo.evolution import Population, proportion_count, select_indices, select_parents

from ..util_individuals import constant_individual


class TestSelection(unittest.TestCase):

    def test_proportion_count(self):
        self.assertEqual(proportion_count(0.3, 10), 3)
        self.assertEqual(proportion_count(0.2, 100), 20)
        self.assertEqual(proportion_count(0.25, 10), 3)
        self.assertEqual(proportion_count(0.0, 10), 0)
        self.assertEqual(proportion_count(1.0, 7), 7)

    def test_truncation(self):
        rng = np.random.default_rng(0)
        fitnesses = rng.permutation(100).astype(float)
        indices = select_indices(fitnesses, 0.2, 0.0, rng)
        self.assertEqual(indices, [int(i) for i in np.argsort(fitnesses)[:20]])

    def test_everyone_selected(self):
        rng = np.random.default_rng(1)
        fitnesses = rng.random(10)
        indices = select_indices(fitnesses, 1.0, 0.0, rng)
        self.assertEqual(sorted(indices), list(range(10)))
        self.assertEqual(indices, [int(i) for i in np.argsort(fitnesses)])

    def test_lucky_parents(self):
        fitnesses = np.array([7, 1, 9, 3, 10, 2, 5, 8, 4, 6], dtype=float)
        for seed in range(20):
            indices = select_indices(fitnesses, 0.3, 0.2, np.random.default_rng(seed))
            self.assertEqual(len(indices), 5)
            self.assertEqual(len(set(indices)), 5)
            self.assertEqual([fitnesses[i] for i in indices[:3]], [1.0, 2.0, 3.0])
            for i in indices[3:]:
                self.assertTrue(fitnesses[i] >= 4.0)

    def test_lucky_exceeds_remainder(self):
        fitnesses = np.arange(10, dtype=float)
        indices = select_indices(fitnesses, 0.9, 0.5, np.random.default_rng(0))
        self.assertEqual(sorted(indices), list(range(10)))

    def test_ties(self):
        indices = select_indices([1.0, 0.0, 0.0, 1.0], 0.5, 0.0, np.random.default_rng(0))
        self.assertEqual(indices, [1, 2])

    def test_infinite_fitness_last(self):
        indices = select_indices([np.inf, 3.0, np.inf, 1.0], 0.5, 0.0, np.random.default_rng(0))
        self.assertEqual(indices, [3, 1])

    def test_parents_contain_best(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            size = int(rng.integers(1, 30))
            fitnesses = rng.normal(size=size)
            best_prop = rng.uniform(0.01, 1.0)
            lucky_prop = rng.uniform(0.0, 1.0 - best_prop)
            individuals = [constant_individual(1, [0.5]) for _ in range(size)]
            parents, parent_fitnesses = select_parents(
                Population(individuals, fitnesses), best_prop, lucky_prop, rng)
            self.assertEqual(len(parents), len(parent_fitnesses))
            self.assertEqual(parent_fitnesses[0], fitnesses.min())
            self.assertIs(parents[0], individuals[int(np.argmin(fitnesses))])

    def test_population_best(self):
        individuals = [constant_individual(2, [v]) for v in (0.1, 0.2, 0.3)]
        population = Population(individuals, [2.0, 1.0, 1.0])
        self.assertEqual(list(population.order()), [1, 2, 0])
        self.assertEqual(population.best(), (individuals[1], 1.0))
        with self.assertRaises(ValueError):
            Population(individuals, [1.0])


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3

import os
import tempfile
import unittest

import numpy as np

from edo.utils import ArchiveExistsError, ConfigurationError, FitnessError, ScheduleError
from edo.data import ColumnLimits, RowLimits
from edo.distributions import get_family
from edo.evolution import EdoConfig, MutationDecay, NoImprovement, run, run_algorithm
from edo.history import list_epochs, load_generation, read_manifest

from ..util_individuals import mean_fitness, noisy_fitness

EPSILON = 1e-12


def offset_fitness(individual, rng, offset=0.0):
    return float(np.mean(individual.dataset.values)) + offset


class FailAfter(object):

    def __init__(self, calls):
        self.calls = calls

    def __call__(self, individual, rng):
        self.calls -= 1
        if self.calls < 0:
            raise RuntimeError('out of calls')
        return 0.0


def small_config(**kwargs):
    params = dict(size=6,
                  row_limits=RowLimits(3, 6),
                  col_limits=ColumnLimits(2, 2),
                  families=[get_family('uniform')],
                  max_iter=5,
                  best_prop=0.5,
                  mutation_prob=0.1,
                  seed=7)
    params.update(kwargs)
    return EdoConfig(**params)


class TestRun(unittest.TestCase):

    def test_no_iterations(self):
        with tempfile.TemporaryDirectory() as root:
            history = run(small_config(max_iter=0), mean_fitness, root=root)
            self.assertEqual(len(history), 1)
            self.assertEqual(history.stop_reason, 'max_iter')
            manifest = read_manifest(root)
            self.assertEqual(manifest.epochs, [0])
            self.assertEqual(manifest.stop_reason, 'max_iter')

    def test_history_shape(self):
        config = small_config()
        history = run(config, noisy_fitness)
        self.assertEqual(len(history), 6)
        self.assertEqual(history.stop_reason, 'max_iter')
        for epoch, record in enumerate(history.records):
            self.assertEqual(record.epoch, epoch)
            self.assertEqual(len(record), 6)
            for individual in record.individuals:
                n_rows, n_cols = individual.shape
                self.assertTrue(3 <= n_rows <= 6)
                self.assertEqual(n_cols, 2)
                self.assertEqual(len(individual.metadata), n_cols)

    def test_deterministic(self):
        first = run(small_config(), noisy_fitness)
        second = run(small_config(), noisy_fitness)
        self.assertEqual(first.records, second.records)
        third = run(small_config(seed=8), noisy_fitness)
        self.assertNotEqual(first.records, third.records)

    def test_elitism(self):
        history = run(small_config(max_iter=10, mutation_prob=0.5), noisy_fitness)
        bests = history.best_fitnesses()
        for previous, current in zip(bests, bests[1:]):
            self.assertTrue(current <= previous)
        individual, fitness = history.best()
        self.assertEqual(fitness, bests[-1])

    def test_parents_keep_fitness(self):
        history = run(small_config(), noisy_fitness)
        for previous, current in zip(history.records, history.records[1:]):
            order = previous.order()
            for k in range(3):
                self.assertIs(current.individuals[k], previous.individuals[order[k]])
                self.assertEqual(current.fitnesses[k], previous.fitnesses[order[k]])

    def test_stop_hook(self):
        config = small_config(max_iter=10, stop=lambda epoch, history: epoch >= 2)
        history = run(config, mean_fitness)
        self.assertEqual(len(history), 3)
        self.assertEqual(history.stop_reason, 'stop hook')

    def test_no_improvement_stops(self):
        config = small_config(max_iter=50, stop=NoImprovement(patience=3))
        history = run(config, lambda individual, rng: 1.0)
        self.assertEqual(len(history), 4)
        self.assertEqual(history.stop_reason, 'stop hook')

    def test_mutation_schedule(self):
        config = small_config(max_iter=3, mutation_prob=0.8, mutation_schedule=MutationDecay(0.5))
        history = run(config, mean_fitness)
        self.assertEqual([r.mutation_prob for r in history.records], [0.8, 0.8, 0.4, 0.2])

    def test_invalid_mutation_schedule(self):
        config = small_config(mutation_schedule=lambda epoch, history: 2.0)
        with self.assertRaises(ScheduleError):
            run(config, mean_fitness)

    def test_shrinkage(self):
        history = run(small_config(max_iter=3, shrinkage=0.5), mean_fitness)
        for subtype in history.records[-1].subtype_state['uniform'].values():
            for lower, upper in subtype.values():
                self.assertTrue(upper - lower <= 0.5 + EPSILON)

    def test_invalid_config(self):
        with self.assertRaises(ConfigurationError) as context:
            run(small_config(size=10, best_prop=0.6, lucky_prop=0.5), mean_fitness)
        self.assertIn('best_prop', str(context.exception))
        with self.assertRaises(ConfigurationError) as context:
            run(small_config(mutation_prob=1.5, size=0), mean_fitness)
        self.assertEqual(len(context.exception.errors), 2)
        with self.assertRaises(ConfigurationError):
            run(small_config(), mean_fitness, workers=0)

    def test_fitness_error_flushes_archive(self):
        with tempfile.TemporaryDirectory() as root:
            with self.assertRaises(FitnessError) as context:
                run(small_config(), FailAfter(6), root=root)
            self.assertEqual(context.exception.epoch, 1)
            self.assertEqual(context.exception.index, 3)
            manifest = read_manifest(root)
            self.assertTrue(manifest.stop_reason.startswith('error'))
            self.assertEqual(list_epochs(root), [0])

    def test_archive(self):
        with tempfile.TemporaryDirectory() as root:
            history = run(small_config(max_iter=2), noisy_fitness, root=root)
            self.assertEqual(list_epochs(root), [0, 1, 2])
            for record in history.records:
                self.assertEqual(load_generation(root, record.epoch), record)
            manifest = read_manifest(root)
            self.assertEqual(manifest.seed, 7)
            self.assertEqual(manifest.config['size'], 6)
            self.assertEqual(manifest.fitness, {'name': 'noisy_fitness', 'params': {}})
            with self.assertRaises(ArchiveExistsError):
                run(small_config(max_iter=2), noisy_fitness, root=root)

    def test_retention(self):
        with tempfile.TemporaryDirectory() as root:
            run(small_config(max_iter=7), mean_fitness, root=root, retention=3)
            self.assertEqual(read_manifest(root).epochs, [0, 3, 6, 7])
            self.assertEqual(list_epochs(root), [0, 3, 6, 7])
            self.assertFalse(os.path.exists(os.path.join(root, 'epoch_1')))

    def test_progress(self):
        seen = []
        run(small_config(max_iter=2), mean_fitness, progress=lambda record: seen.append(record.epoch))
        self.assertEqual(seen, [0, 1, 2])

    def test_run_algorithm(self):
        with tempfile.TemporaryDirectory() as root:
            history = run_algorithm(offset_fitness,
                                    size=6,
                                    row_limits=[3, 6],
                                    col_limits=[2, 2],
                                    families=['uniform'],
                                    max_iter=2,
                                    best_prop=0.5,
                                    root=root,
                                    fitness_kwargs={'offset': 10.0})
            self.assertEqual(len(history), 3)
            self.assertTrue(np.all(history.records[-1].fitnesses >= 10.0))
            self.assertEqual(read_manifest(root).fitness,
                             {'name': 'offset_fitness', 'params': {'offset': 10.0}})


if __name__ == '__main__':
    unittest.main()

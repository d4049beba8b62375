#!/usr/bin/env python3

import os
import tempfile
import unittest

import numpy as np

from edo.utils import ArchiveError, EpochNotFoundError, IncompleteEpochError
from edo.data import ColumnLimits, RowLimits, create_individual
from edo.distributions import SearchSpace, get_family
from edo.history import (
    ArchiveWriter,
    GenerationRecord,
    RunManifest,
    list_epochs,
    load_generation,
    read_fitnesses,
    read_manifest,
    write_generation,
)
from edo.history.archive import individual_paths


def random_record(epoch, rng, space=None):
    if space is None:
        space = SearchSpace([get_family('uniform', max_subtypes=2), get_family('normal')])
    size = int(rng.integers(1, 6))
    individuals = [create_individual(RowLimits(1, 8), ColumnLimits(1, 4), space, rng)
                   for _ in range(size)]
    fitnesses = rng.normal(size=size)
    fitnesses[rng.random(size) < 0.2] = np.inf
    return GenerationRecord(epoch, individuals, fitnesses, space.state(), rng.uniform())


def manifest():
    return RunManifest(config={'size': 2}, seed=3, fitness={'name': 'inertia', 'params': {'k': 2}},
                       engine_version='0.1.0')


class TestArchive(unittest.TestCase):

    def test_layout(self):
        rng = np.random.default_rng(0)
        space = SearchSpace([get_family('uniform')])
        individuals = [create_individual(RowLimits(3, 3), ColumnLimits(2, 2), space, rng) for _ in range(2)]
        record = GenerationRecord(0, individuals, [0.5, np.inf], space.state(), 0.01)
        with tempfile.TemporaryDirectory() as root:
            write_generation(root, record)
            names = sorted(os.listdir(os.path.join(root, 'epoch_0')))
            self.assertEqual(names, ['fitness.csv', 'generation.json',
                                     'individual_0.csv', 'individual_0.meta.json',
                                     'individual_1.csv', 'individual_1.meta.json',
                                     'subtypes.json'])
            with open(os.path.join(root, 'epoch_0', 'fitness.csv')) as fitness_file:
                self.assertEqual(fitness_file.read(), 'individual_index,fitness\n0,0.5\n1,inf\n')
            self.assertTrue(np.array_equal(read_fitnesses(root, 0), [0.5, np.inf]))

    def test_round_trip(self):
        rng = np.random.default_rng(1)
        with tempfile.TemporaryDirectory() as root:
            records = [random_record(epoch, rng) for epoch in range(20)]
            for record in records:
                write_generation(root, record)
            self.assertEqual(list_epochs(root), list(range(20)))
            for record in records:
                self.assertEqual(load_generation(root, record.epoch), record)

    def test_missing_individual(self):
        rng = np.random.default_rng(2)
        with tempfile.TemporaryDirectory() as root:
            space = SearchSpace([get_family('uniform')])
            individuals = [create_individual(RowLimits(2, 4), ColumnLimits(1, 2), space, rng)
                           for _ in range(3)]
            write_generation(root, GenerationRecord(4, individuals, [1.0, 2.0, 3.0], space.state(), 0.1))
            csv_path, _ = individual_paths(root, 4, 1)
            os.remove(csv_path)
            with self.assertRaises(IncompleteEpochError) as context:
                load_generation(root, 4)
            self.assertEqual(context.exception.path, csv_path)
            self.assertEqual(context.exception.epoch, 4)

    def test_incomplete_epoch(self):
        with tempfile.TemporaryDirectory() as root:
            write_generation(root, random_record(0, np.random.default_rng(3)))
            os.makedirs(os.path.join(root, 'epoch_5'))
            self.assertEqual(list_epochs(root), [0])
            with self.assertRaises(IncompleteEpochError):
                load_generation(root, 5)
            with self.assertRaises(EpochNotFoundError):
                load_generation(root, 9)

    def test_manifest(self):
        original = manifest()
        original.epochs = [0, 5]
        self.assertEqual(RunManifest.from_json(original.to_json()), original)
        with tempfile.TemporaryDirectory() as root:
            with self.assertRaises(ArchiveError):
                read_manifest(root)

    def test_writer(self):
        rng = np.random.default_rng(4)
        space = SearchSpace([get_family('uniform')])
        with tempfile.TemporaryDirectory() as root:
            writer = ArchiveWriter(root, manifest(), every=2).open()
            for epoch in range(4):
                writer.write(random_record(epoch, rng, space))
                self.assertEqual(read_manifest(root).stop_reason, 'running')
            writer.close('max_iter')
            written = read_manifest(root)
            self.assertEqual(written.epochs, [0, 2, 3])
            self.assertEqual(written.retention, 2)
            self.assertEqual(written.stop_reason, 'max_iter')
            self.assertEqual(list_epochs(root), [0, 2, 3])
        with self.assertRaises(ValueError):
            ArchiveWriter('unused', manifest(), every=0)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3

import os
import tempfile
import unittest

from edo.clustering import get_fitness
from edo.data import ColumnLimits, RowLimits
from edo.distributions import get_family
from edo.evolution import EdoConfig, run

from .util_runs import archive_files, audit_elitism


def config():
    return EdoConfig(size=20,
                     row_limits=RowLimits(3, 30),
                     col_limits=ColumnLimits(2, 2),
                     families=[get_family('uniform')],
                     max_iter=5,
                     best_prop=0.2,
                     mutation_prob=0.05,
                     seed=11)


class TestDeterminism(unittest.TestCase):

    def test_byte_identical_archives(self):
        with tempfile.TemporaryDirectory() as tmp:
            archives = []
            for name, workers in (('serial', 1), ('again', 1), ('parallel', 4)):
                root = os.path.join(tmp, name)
                run(config(), get_fitness('inertia', k=2), root=root, workers=workers)
                self.assertTrue(audit_elitism(root))
                archives.append(archive_files(root))
            self.assertEqual(archives[0], archives[1])
            self.assertEqual(archives[0], archives[2])

    def test_comparison_fitness_in_parallel(self):
        fitness = get_fitness('kmeans-vs-dbscan', k=3, eps=0.1, min_points=5)
        with tempfile.TemporaryDirectory() as tmp:
            serial = run(config(), fitness, root=os.path.join(tmp, 'serial'))
            parallel = run(config(), fitness, root=os.path.join(tmp, 'parallel'), workers=4)
            self.assertEqual(serial.records, parallel.records)
            self.assertEqual(archive_files(os.path.join(tmp, 'serial')),
                             archive_files(os.path.join(tmp, 'parallel')))


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3

import os
import tempfile
import unittest

import numpy as np

from edo.data import ColumnLimits, RowLimits
from edo.distributions import get_family
from edo.evolution import EdoConfig, run
from edo.history import load_generation, read_manifest


def value_and_noise(individual, rng):
    values = individual.dataset.values
    if values.shape[0] == 1:
        return np.inf
    return float(np.std(values)) + rng.random()


class TestArchiveRoundTrip(unittest.TestCase):

    def test_three_epoch_histories(self):
        rng = np.random.default_rng(0)
        with tempfile.TemporaryDirectory() as tmp:
            for case in range(100):
                config = EdoConfig(size=int(rng.integers(1, 6)),
                                   row_limits=RowLimits(1, int(rng.integers(1, 8))),
                                   col_limits=ColumnLimits(1, int(rng.integers(1, 4))),
                                   families=[get_family('uniform', max_subtypes=2),
                                             get_family('normal', limits={'std': [0, 2]})],
                                   weights=(rng.random(2) + 0.1).tolist(),
                                   max_iter=2,
                                   best_prop=0.5,
                                   mutation_prob=float(rng.uniform()),
                                   shrinkage=float(rng.uniform(0.1, 0.9)) if case % 2 else None,
                                   seed=case)
                root = os.path.join(tmp, 'case_' + str(case))
                history = run(config, value_and_noise, root=root)
                self.assertEqual(read_manifest(root).epochs, [0, 1, 2])
                for record in history.records:
                    self.assertEqual(load_generation(root, record.epoch), record)


if __name__ == '__main__':
    unittest.main()

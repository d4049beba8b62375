#!/usr/bin/env python3

import unittest

import numpy as np

from edo.utils import ConfigurationError
from edo.distributions import (
    FamilySpec,
    choose_family,
    get_family,
    list_families,
    register_family,
)
from edo.distributions.families import _FAMILIES


def sample_exponential(parameter_values, rng, size):
    return rng.exponential(parameter_values[0], size=size)


class TestFamilies(unittest.TestCase):

    def tearDown(self):
        _FAMILIES.pop('exponential', None)

    def test_shipped_families(self):
        self.assertIn('uniform', list_families())
        self.assertIn('normal', list_families())
        uniform = get_family('uniform')
        self.assertEqual(uniform.parameter_names, ('a', 'b'))
        self.assertEqual(uniform.initial_limits, ((0.0, 1.0), (0.0, 1.0)))
        self.assertEqual(uniform.max_subtypes, 1)

    def test_limit_overrides(self):
        normal = get_family('normal', limits={'std': [0, 2]}, max_subtypes=3)
        self.assertEqual(normal.initial_limits, ((-1.0, 1.0), (0.0, 2.0)))
        self.assertEqual(normal.max_subtypes, 3)

    def test_invalid_families(self):
        with self.assertRaises(ConfigurationError):
            get_family('poisson')
        with self.assertRaises(ConfigurationError):
            get_family('uniform', limits={'c': [0, 1]})
        with self.assertRaises(ConfigurationError):
            get_family('uniform', limits={'a': [1, 0]})
        with self.assertRaises(ConfigurationError):
            get_family('uniform', max_subtypes=0)
        with self.assertRaises(ConfigurationError):
            FamilySpec('uniform', ('a', 'b'), ((0, 1), ))

    def test_dict_round_trip(self):
        family = get_family('normal', limits={'mean': [-2, 2]}, max_subtypes=4)
        self.assertEqual(FamilySpec.from_dict(family.to_dict()), family)

    def test_register_family(self):
        register_family('exponential', ['scale'], [(0.5, 2.0)], sample_exponential)
        family = get_family('exponential')
        self.assertEqual(family.parameter_names, ('scale', ))
        draws = family.sample((1.0, ), np.random.default_rng(0), size=100)
        self.assertEqual(draws.shape, (100, ))
        self.assertTrue(np.all(draws >= 0))

    def test_choose_single_family(self):
        rng = np.random.default_rng(0)
        uniform = get_family('uniform')
        for _ in range(20):
            self.assertIs(choose_family([uniform], [1.0], rng), uniform)

    def test_choose_zero_weight(self):
        rng = np.random.default_rng(1)
        families = [get_family('uniform'), get_family('normal')]
        for _ in range(100):
            self.assertEqual(choose_family(families, [1, 0], rng).name, 'uniform')

    def test_choose_frequencies(self):
        rng = np.random.default_rng(2)
        families = [get_family('uniform'), get_family('normal')]
        draws = [choose_family(families, [0.5, 0.5], rng).name for _ in range(10000)]
        frequency = draws.count('uniform') / len(draws)
        self.assertTrue(0.48 <= frequency <= 0.52)

    def test_choose_invalid_weights(self):
        rng = np.random.default_rng(0)
        families = [get_family('uniform'), get_family('normal')]
        with self.assertRaises(ConfigurationError):
            choose_family(families, [1.0], rng)
        with self.assertRaises(ConfigurationError):
            choose_family(families, [1.0, -1.0], rng)
        with self.assertRaises(ConfigurationError):
            choose_family(families, [0.0, 0.0], rng)


if __name__ == '__main__':
    unittest.main()

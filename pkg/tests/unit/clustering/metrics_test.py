#!/usr/bin/env python3

import unittest

import numpy as np

from edo.utils import SilhouetteUndefinedError
from edo.clustering import Partition, inertia, silhouette, silhouette_samples
from edo.data import Dataset

from .util_clustering import naive_silhouette

EPSILON = 1e-12

SQUARE = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]])


class TestInertia(unittest.TestCase):

    def test_singletons(self):
        X = np.random.default_rng(0).random((6, 2))
        self.assertEqual(inertia(Partition(np.arange(6), 6), X), 0.0)

    def test_square(self):
        partition = Partition(np.array([0, 0, 1, 1]), 2)
        self.assertEqual(inertia(partition, SQUARE), 0.25)
        centroids = np.array([[0.0, 0.5], [1.0, 0.5]])
        self.assertEqual(inertia(Partition(np.array([0, 0, 1, 1]), 2, centroids), SQUARE), 0.25)
        self.assertEqual(inertia(partition, Dataset(SQUARE)), 0.25)

    def test_relabelling(self):
        rng = np.random.default_rng(1)
        X = rng.random((20, 3))
        labels = rng.integers(3, size=20)
        permuted = np.array([2, 0, 1])[labels]
        self.assertTrue(abs(inertia(Partition(labels, 3), X)
                            - inertia(Partition(permuted, 3), X)) < EPSILON)

    def test_invalid_labels(self):
        with self.assertRaises(ValueError):
            inertia(Partition(np.array([0, 0, 2, 1]), 2), SQUARE)
        with self.assertRaises(ValueError):
            inertia(Partition(np.array([0, 1]), 2), SQUARE)


class TestSilhouette(unittest.TestCase):

    def test_two_singletons(self):
        self.assertEqual(silhouette([0, 1], [[0.0, 0.0], [1.0, 1.0]]), 0.0)

    def test_tight_pairs(self):
        delta = 1e-6
        X = [[0.0, 0.0], [0.0, delta], [1.0, 0.0], [1.0, delta]]
        self.assertTrue(silhouette([0, 0, 1, 1], X) > 0.9999)

    def test_square(self):
        expected = naive_silhouette([0, 0, 1, 1], SQUARE)
        self.assertTrue(abs(expected - (np.sqrt(2) - 1.0) / (1.0 + np.sqrt(2))) < EPSILON)
        self.assertTrue(abs(silhouette([0, 0, 1, 1], SQUARE) - expected) < EPSILON)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            n = int(rng.integers(2, 9))
            X = rng.random((n, 2))
            labels = rng.integers(-1, 3, size=n)
            if len(set(labels.tolist())) < 2:
                continue
            value = silhouette(labels, X)
            self.assertTrue(abs(value - naive_silhouette(labels, X)) < EPSILON)
            samples = silhouette_samples(labels, X)
            self.assertTrue(np.all(samples >= -1.0) and np.all(samples <= 1.0))

    def test_single_cluster(self):
        with self.assertRaises(SilhouetteUndefinedError):
            silhouette([0, 0, 0], [[0.0], [1.0], [2.0]])


if __name__ == '__main__':
    unittest.main()

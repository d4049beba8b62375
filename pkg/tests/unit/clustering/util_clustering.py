#!/usr/bin/env python3

"""
Brute-force reference implementations, only usable on a handful of points.
"""

import collections
import itertools

import numpy as np


def naive_silhouette(labels, X):
    X = np.asarray(X, dtype=float)
    labels = list(labels)
    values = []
    for i, x in enumerate(X):
        own = [j for j in range(len(X)) if labels[j] == labels[i] and j != i]
        if not own:
            values.append(0.0)
            continue
        a = np.mean([np.linalg.norm(x - X[j]) for j in own])
        b = min(np.mean([np.linalg.norm(x - X[j]) for j in range(len(X)) if labels[j] == other])
                for other in set(labels) if other != labels[i])
        scale = max(a, b)
        values.append(0.0 if scale == 0 else (b - a) / scale)
    return float(np.mean(values))


def naive_inertia(labels, X):
    X = np.asarray(X, dtype=float)
    labels = np.asarray(labels)
    total = 0.0
    for label in set(labels.tolist()):
        members = X[labels == label]
        total += np.sum((members - members.mean(axis=0)) ** 2)
    return total / len(X)


def optimal_inertia(X, k):
    """Smallest inertia over every assignment of the points to k non-empty clusters."""
    best = np.inf
    for labels in itertools.product(range(k), repeat=len(X)):
        if len(set(labels)) == k:
            best = min(best, naive_inertia(labels, X))
    return best


def naive_dbscan(X, eps, min_points):
    X = np.asarray(X, dtype=float)
    n = len(X)
    neighbours = [[j for j in range(n) if np.linalg.norm(X[i] - X[j]) <= eps] for i in range(n)]
    core = [len(nb) >= min_points for nb in neighbours]
    labels = [-1] * n
    cluster = 0
    for start in range(n):
        if not core[start] or labels[start] != -1:
            continue
        labels[start] = cluster
        queue = collections.deque([start])
        while queue:
            point = queue.popleft()
            for other in neighbours[point]:
                if labels[other] == -1:
                    labels[other] = cluster
                    if core[other]:
                        queue.append(other)
        cluster += 1
    return np.array(labels), np.array(core)


def same_partition(labels_a, labels_b):
    """Whether two labellings group the points identically, up to relabelling."""
    mapping = {}
    reverse = {}
    for a, b in zip(labels_a, labels_b):
        if mapping.setdefault(a, b) != b or reverse.setdefault(b, a) != a:
            return False
    return True

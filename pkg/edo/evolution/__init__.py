#!/usr/bin/env python3

r"""
The evolutionary loop: selection, crossover, mutation and population
creation, driven by an `EdoConfig`.
"""

from .config import EdoConfig, Population, proportion_count
from .selection import select_indices, select_parents, prune_subtypes
from .operators import crossover, mutate
from .population import (
    create_initial_population,
    create_new_population,
    evaluate_population,
)
from .hooks import NoImprovement, FitnessSpread, MutationDecay
from .loop import History, run, run_algorithm

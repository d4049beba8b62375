#!/usr/bin/env python3

r"""
Distribution families, their subtypes, and the search space they span.

Every column of an individual is generated by a `DistributionInstance`, a
concrete parameterisation of a family (e.g. `Uniform(a, b)`). Instances belong
to a `Subtype`, an independent copy of the family whose parameter limits can be
shrunk during a run.
"""

from .families import (
    FamilySpec,
    register_family,
    list_families,
    get_family,
    choose_family,
)
from .subtypes import Subtype, SubtypePool, shrink_subtype
from .instances import DistributionInstance, new_instance, sample_value
from .space import SearchSpace

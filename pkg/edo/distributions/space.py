#!/usr/bin/env python3

import logging

import numpy as np

from edo.utils import ConfigurationError
from .families import choose_family
from .instances import new_instance
from .subtypes import SubtypePool, shrink_subtype

logger = logging.getLogger(__name__)


class SearchSpace(object):

    """
    **Description**

    The families available to a run, their sampling weights, and the live
    subtypes of each family.

    A single search space is shared by every individual of a run; it is only
    modified between generations, by pruning and shrinking.

    **Arguments**

    * **families** (list) - The `FamilySpec`s to sample columns from.
    * **weights** (list, *optional*, default=None) - Sampling weights, one per
        family. Defaults to uniform weights.

    **Example**
    ~~~python
    space = SearchSpace([get_family('uniform'), get_family('normal')], weights=[0.8, 0.2])
    family = space.choose_family(rng)
    instance = space.new_instance(family, rng)
    ~~~
    """

    def __init__(self, families, weights=None):
        families = list(families)
        if len(families) == 0:
            raise ConfigurationError('families: at least one family is required')
        names = [f.name for f in families]
        if len(set(names)) != len(names):
            raise ConfigurationError('families: each family may only appear once')
        if weights is None:
            weights = np.ones(len(families))
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (len(families), ):
            raise ConfigurationError('weights: expected ' + str(len(families))
                                     + ' entries, got ' + str(weights.size))
        if np.any(weights < 0) or not np.isfinite(weights).all() or weights.sum() <= 0:
            raise ConfigurationError('weights: entries must be non-negative with a positive sum')
        self.families = families
        self.weights = weights
        self.pools = {f.name: SubtypePool(f) for f in families}

    def family(self, name):
        for family in self.families:
            if family.name == name:
                return family
        raise KeyError(name)

    def choose_family(self, rng, allowed=None):
        """
        Samples a family by weight, restricted to the names in `allowed` when
        given. Returns None when no allowed family has positive weight.
        """
        weights = self.weights
        if allowed is not None:
            mask = np.array([f.name in allowed for f in self.families])
            weights = weights * mask
            if weights.sum() <= 0:
                return None
        return choose_family(self.families, weights, rng)

    def new_instance(self, family, rng):
        subtype = self.pools[family.name].allocate(rng)
        return new_instance(subtype, rng)

    def prune(self, parents):
        """
        Retires every subtype that no parent column refers to.

        Returns a dict mapping family names to the retired subtype ids.
        """
        referenced = {name: set() for name in self.pools}
        for individual in parents:
            for instance in individual.metadata:
                referenced[instance.family.name].add(instance.subtype.subtype_id)
        return {name: pool.retain(referenced[name]) for name, pool in self.pools.items()}

    def shrink(self, parents, shrinkage, iteration):
        """
        Shrinks the limits of every subtype referenced by the parents about the
        mean parameter values of the parent columns using it.
        """
        observed = {}
        for individual in parents:
            for instance in individual.metadata:
                key = (instance.family.name, instance.subtype.subtype_id)
                values = observed.setdefault(key, [[] for _ in instance.parameter_values])
                for store, value in zip(values, instance.parameter_values):
                    store.append(value)
        for (name, subtype_id), values in sorted(observed.items()):
            subtype = self.pools[name].live.get(subtype_id)
            if subtype is not None:
                shrink_subtype(subtype, values, shrinkage, iteration)

    def state(self):
        return {name: pool.state() for name, pool in self.pools.items()}

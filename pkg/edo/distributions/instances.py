#!/usr/bin/env python3

import numpy as np


class DistributionInstance(object):

    """
    **Description**

    A concrete member of a family subtype, e.g. `Uniform(0.2, 0.7)`.

    Instances are immutable; `replace` returns a copy with one parameter
    changed.

    **Arguments**

    * **subtype** (Subtype) - The subtype this instance belongs to.
    * **parameter_values** (tuple) - One value per family parameter.
    """

    def __init__(self, subtype, parameter_values):
        parameter_values = tuple(float(v) for v in parameter_values)
        if len(parameter_values) != subtype.family.n_parameters:
            raise ValueError('expected ' + str(subtype.family.n_parameters)
                             + ' parameter values, got ' + str(len(parameter_values)))
        self.subtype = subtype
        self.parameter_values = parameter_values

    @property
    def family(self):
        return self.subtype.family

    @property
    def parameters(self):
        return dict(zip(self.family.parameter_names, self.parameter_values))

    def sample(self, rng, size=None):
        return self.family.sample(self.parameter_values, rng, size)

    def replace(self, index, value):
        values = list(self.parameter_values)
        values[index] = value
        return DistributionInstance(self.subtype, values)

    def to_dict(self):
        return {
            'family': self.family.name,
            'subtype_id': self.subtype.subtype_id,
            'parameters': self.parameters,
        }

    def __eq__(self, other):
        return (isinstance(other, DistributionInstance)
                and self.family.name == other.family.name
                and self.subtype.subtype_id == other.subtype.subtype_id
                and self.parameter_values == other.parameter_values)

    def __hash__(self):
        return hash((self.family.name, self.subtype.subtype_id, self.parameter_values))

    def __repr__(self):
        params = ', '.join(k + '=' + repr(v) for k, v in self.parameters.items())
        return self.family.name + '(' + params + ')[' + str(self.subtype.subtype_id) + ']'


def new_instance(subtype, rng):
    """
    **Description**

    Creates an instance of a subtype, drawing each parameter uniformly from the
    subtype's current limits.

    **Arguments**

    * **subtype** (Subtype) - The subtype to instantiate.
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (DistributionInstance) - The new instance.
    """
    values = [rng.uniform(lower, upper) for lower, upper in subtype.current_limits]
    return DistributionInstance(subtype, values)


def sample_value(instance, rng, size=None):
    """Draws one value (or `size` values) from `instance`."""
    value = instance.sample(rng, size=size)
    if size is None:
        return float(value)
    return np.asarray(value, dtype=float)

#!/usr/bin/env python3

import collections
import dataclasses

import numpy as np

from edo.utils import ConfigurationError

__all__ = [
    'FamilySpec',
    'register_family',
    'list_families',
    'get_family',
    'choose_family',
]

_FamilyDefinition = collections.namedtuple(
    '_FamilyDefinition',
    ('parameter_names', 'default_limits', 'sampler'),
)


def _sample_uniform(parameter_values, rng, size):
    a, b = parameter_values
    # Unordered bounds describe the same support.
    return rng.uniform(min(a, b), max(a, b), size=size)


def _sample_normal(parameter_values, rng, size):
    mean, std = parameter_values
    return rng.normal(mean, std, size=size)


_FAMILIES = {
    'uniform': _FamilyDefinition(('a', 'b'), ((0.0, 1.0), (0.0, 1.0)), _sample_uniform),
    'normal': _FamilyDefinition(('mean', 'std'), ((-1.0, 1.0), (0.0, 1.0)), _sample_normal),
}


def register_family(name, parameter_names, default_limits, sampler):
    """
    **Description**

    Makes a new distribution family available to `get_family` and to experiment
    configuration files.

    The sampler is called as `sampler(parameter_values, rng, size)` and must
    return `size` draws (or a scalar when `size` is None) from the
    distribution described by `parameter_values`, a tuple ordered like
    `parameter_names`.

    **Arguments**

    * **name** (str) - Identifier of the family.
    * **parameter_names** (list) - Ordered parameter names.
    * **default_limits** (list) - One `(lower, upper)` pair per parameter.
    * **sampler** (callable) - Draws values from an instance of the family.

    **Example**
    ~~~python
    def sample_exponential(values, rng, size):
        return rng.exponential(values[0], size=size)

    edo.distributions.register_family('exponential', ['scale'], [(0.1, 2.0)], sample_exponential)
    family = edo.distributions.get_family('exponential')
    ~~~
    """
    parameter_names = tuple(parameter_names)
    default_limits = tuple(tuple(float(v) for v in pair) for pair in default_limits)
    if len(parameter_names) != len(default_limits):
        raise ConfigurationError('family ' + name + ': one limit pair per parameter is required')
    _FAMILIES[name] = _FamilyDefinition(parameter_names, default_limits, sampler)


def list_families():
    """Returns the names of all registered families."""
    return list(_FAMILIES.keys())


@dataclasses.dataclass(frozen=True)
class FamilySpec(object):

    """
    **Description**

    A distribution family together with the initial limits on its parameters
    and the maximum number of subtypes that may coexist during a run.

    Instances are usually built with `get_family`, which fills in the
    parameter names of a registered family.

    **Arguments**

    * **name** (str) - Name of a registered family.
    * **parameter_names** (tuple) - Ordered parameter names.
    * **initial_limits** (tuple) - One closed `(lower, upper)` interval per parameter.
    * **max_subtypes** (int, *optional*, default=1) - Maximum number of live subtypes.
    """

    name: str
    parameter_names: tuple
    initial_limits: tuple
    max_subtypes: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'parameter_names', tuple(self.parameter_names))
        errors = []
        try:
            limits = tuple((float(lo), float(hi)) for lo, hi in self.initial_limits)
        except (TypeError, ValueError):
            raise ConfigurationError('family ' + str(self.name) + ': limits must be [lower, upper] pairs')
        object.__setattr__(self, 'initial_limits', limits)
        if self.name not in _FAMILIES:
            errors.append('family ' + str(self.name) + ': unknown family (registered: '
                          + ', '.join(list_families()) + ')')
        if len(limits) != len(self.parameter_names):
            errors.append('family ' + str(self.name) + ': expected '
                          + str(len(self.parameter_names)) + ' limit pairs, got ' + str(len(limits)))
        for param, (lo, hi) in zip(self.parameter_names, limits):
            if not (np.isfinite(lo) and np.isfinite(hi)) or lo > hi:
                errors.append('family ' + str(self.name) + ': limits of ' + param
                              + ' must be finite with lower <= upper')
        if int(self.max_subtypes) != self.max_subtypes or self.max_subtypes < 1:
            errors.append('family ' + str(self.name) + ': max_subtypes must be a positive integer')
        if errors:
            raise ConfigurationError(errors)
        object.__setattr__(self, 'max_subtypes', int(self.max_subtypes))

    @property
    def n_parameters(self):
        return len(self.parameter_names)

    def sample(self, parameter_values, rng, size=None):
        return _FAMILIES[self.name].sampler(tuple(parameter_values), rng, size)

    def to_dict(self):
        return {
            'name': self.name,
            'limits': {p: list(l) for p, l in zip(self.parameter_names, self.initial_limits)},
            'max_subtypes': self.max_subtypes,
        }

    @classmethod
    def from_dict(cls, data):
        limits = data.get('limits')
        return get_family(data['name'], limits=limits, max_subtypes=data.get('max_subtypes', 1))


def get_family(name, limits=None, max_subtypes=1):
    """
    **Description**

    Builds the `FamilySpec` of a registered family.

    Parameters whose limits are not given keep the family's default limits.

    **Arguments**

    * **name** (str) - The family name. Full list in `list_families()`.
    * **limits** (dict, *optional*, default=None) - Maps parameter names to `[lower, upper]`.
    * **max_subtypes** (int, *optional*, default=1) - Maximum number of live subtypes.

    **Example**
    ~~~python
    uniform = edo.distributions.get_family('uniform', limits={'a': [0, 1], 'b': [0, 1]})
    ~~~
    """
    if name not in _FAMILIES:
        raise ConfigurationError('unknown family ' + repr(name) + ' (registered: '
                                 + ', '.join(list_families()) + ')')
    definition = _FAMILIES[name]
    limits = dict(limits or {})
    unknown = sorted(set(limits) - set(definition.parameter_names))
    if unknown:
        raise ConfigurationError('family ' + name + ': unknown parameters ' + ', '.join(unknown))
    initial_limits = tuple(
        tuple(limits.get(param, default))
        for param, default in zip(definition.parameter_names, definition.default_limits)
    )
    return FamilySpec(name, definition.parameter_names, initial_limits, max_subtypes)


def choose_family(families, weights, rng):
    """
    **Description**

    Samples a family with probability proportional to its weight.

    **Arguments**

    * **families** (list) - Candidate `FamilySpec`s.
    * **weights** (array) - Non-negative weights, one per family, with positive sum.
    * **rng** (Generator) - Source of randomness.

    **Return**

    * (FamilySpec) - The chosen family.
    """
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or len(weights) != len(families):
        raise ConfigurationError('expected ' + str(len(families)) + ' family weights, got '
                                 + str(weights.size))
    if np.any(weights < 0) or not np.isfinite(weights).all() or weights.sum() <= 0:
        raise ConfigurationError('family weights must be non-negative with a positive sum')
    index = rng.choice(len(families), p=weights / weights.sum())
    return families[index]

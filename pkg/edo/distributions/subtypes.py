#!/usr/bin/env python3

import collections
import logging

import numpy as np

from edo.utils import ConfigurationError

logger = logging.getLogger(__name__)


class Subtype(object):

    """
    **Description**

    An independent copy of a distribution family.

    Each subtype owns its own parameter limits, which start at the family's
    initial limits and may only shrink during a run.

    **Arguments**

    * **family** (FamilySpec) - The family this subtype copies.
    * **subtype_id** (int) - Identifier, unique within the family.
    * **current_limits** (list, *optional*, default=None) - One `(lower, upper)`
        pair per parameter. Defaults to the family's initial limits.
    """

    def __init__(self, family, subtype_id, current_limits=None):
        self.family = family
        self.subtype_id = int(subtype_id)
        if current_limits is None:
            current_limits = family.initial_limits
        current_limits = [(float(lo), float(hi)) for lo, hi in current_limits]
        if len(current_limits) != family.n_parameters:
            raise ConfigurationError('subtype ' + str(subtype_id) + ' of ' + family.name
                                     + ': wrong number of limits')
        for (lo, hi), (init_lo, init_hi) in zip(current_limits, family.initial_limits):
            if not init_lo <= lo <= hi <= init_hi:
                raise ConfigurationError('subtype ' + str(subtype_id) + ' of ' + family.name
                                         + ': limits must lie within the family limits')
        self.current_limits = current_limits

    def limits(self, parameter):
        return self.current_limits[self.family.parameter_names.index(parameter)]

    def state(self):
        return {p: list(l) for p, l in zip(self.family.parameter_names, self.current_limits)}

    def __eq__(self, other):
        return (isinstance(other, Subtype)
                and self.family.name == other.family.name
                and self.subtype_id == other.subtype_id
                and self.current_limits == other.current_limits)

    def __hash__(self):
        return hash((self.family.name, self.subtype_id))

    def __repr__(self):
        return 'Subtype(' + self.family.name + ', ' + str(self.subtype_id) + ', ' + str(self.state()) + ')'


class SubtypePool(object):

    """
    **Description**

    Bookkeeping of the live subtypes of one family.

    Subtypes are allocated lazily: while fewer than `max_subtypes` are live, a
    column requesting the family gets a fresh subtype with probability
    `1 / (live + 1)`, and an existing live subtype (chosen uniformly) otherwise.
    Retired subtypes are never handed out again and their identifiers are never
    reused.

    **Arguments**

    * **family** (FamilySpec) - The family whose subtypes are tracked.
    """

    def __init__(self, family):
        self.family = family
        self.live = collections.OrderedDict()
        self.retired = set()
        self._next_id = 0

    def __len__(self):
        return len(self.live)

    def fresh(self):
        subtype = Subtype(self.family, self._next_id)
        self.live[subtype.subtype_id] = subtype
        self._next_id += 1
        return subtype

    def allocate(self, rng):
        n_live = len(self.live)
        if n_live == 0:
            return self.fresh()
        if n_live < self.family.max_subtypes and rng.random() < 1.0 / (n_live + 1):
            return self.fresh()
        ids = list(self.live.keys())
        return self.live[ids[rng.integers(n_live)]]

    def retain(self, subtype_ids):
        retired = [i for i in self.live if i not in subtype_ids]
        for subtype_id in retired:
            del self.live[subtype_id]
            self.retired.add(subtype_id)
        if retired:
            logger.debug('retired %s subtypes %s', self.family.name, retired)
        return retired

    def state(self):
        return {str(i): s.state() for i, s in self.live.items()}


def shrink_subtype(subtype, observed_values, shrinkage, iteration):
    """
    **Description**

    Shrinks the parameter limits of a subtype about the mean value observed in
    the parents, following a power law in the iteration index:

    $$l_{t+1} = \\max\\{l_t, \\mu - \\frac{1}{2}(u_t - l_t)s^t\\}, \\quad
    u_{t+1} = \\min\\{u_t, \\mu + \\frac{1}{2}(u_t - l_t)s^t\\}.$$

    The observed mean is clamped into the current limits first, since values
    sampled under earlier, wider limits can lie outside of them; this keeps
    `l_{t+1} <= u_{t+1}`. Parameters without observations keep their limits.

    The subtype is updated in place, so that instances referring to it see the
    new limits.

    **Arguments**

    * **subtype** (Subtype) - The subtype to shrink.
    * **observed_values** (dict or list) - Observed values per parameter, keyed
        by parameter name or ordered like the family's parameters.
    * **shrinkage** (float) - Shrink factor `s` in [0, 1].
    * **iteration** (int) - Iteration index `t >= 1`.

    **Return**

    * (Subtype) - The updated subtype.

    **Example**
    ~~~python
    subtype = Subtype(get_family('uniform'), 0)
    shrink_subtype(subtype, {'a': [0.5], 'b': [0.5]}, shrinkage=0.5, iteration=1)
    subtype.current_limits  # [(0.25, 0.75), (0.25, 0.75)]
    ~~~
    """
    if not 0.0 <= shrinkage <= 1.0:
        raise ValueError('shrinkage must lie in [0, 1], got ' + str(shrinkage))
    if iteration < 1:
        raise ValueError('iteration must be at least 1, got ' + str(iteration))
    names = subtype.family.parameter_names
    if isinstance(observed_values, dict):
        observed_values = [observed_values.get(name) for name in names]
    factor = shrinkage ** iteration
    new_limits = []
    for (lower, upper), values in zip(subtype.current_limits, observed_values):
        if values is None or len(values) == 0:
            new_limits.append((lower, upper))
            continue
        mean = min(max(float(np.mean(values)), lower), upper)
        half_width = 0.5 * (upper - lower) * factor
        new_limits.append((max(lower, mean - half_width), min(upper, mean + half_width)))
    subtype.current_limits = new_limits
    return subtype

#!/usr/bin/env python3

import dataclasses

from edo.utils import ConfigurationError


@dataclasses.dataclass(frozen=True)
class RowLimits(object):

    """
    **Description**

    Bounds on the number of rows of every dataset in a run.

    **Arguments**

    * **r_min** (int) - Minimum number of rows, at least 1.
    * **r_max** (int) - Maximum number of rows, at least `r_min`.
    """

    r_min: int
    r_max: int

    def __post_init__(self):
        errors = []
        for name in ('r_min', 'r_max'):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                errors.append('row_limits.' + name + ': must be a positive integer, got ' + repr(value))
        if not errors and self.r_min > self.r_max:
            errors.append('row_limits: r_min must not exceed r_max')
        if errors:
            raise ConfigurationError(errors)
        object.__setattr__(self, 'r_min', int(self.r_min))
        object.__setattr__(self, 'r_max', int(self.r_max))

    def contains(self, n_rows):
        return self.r_min <= n_rows <= self.r_max

    def sample(self, rng):
        return int(rng.integers(self.r_min, self.r_max + 1))

    def to_list(self):
        return [self.r_min, self.r_max]


@dataclasses.dataclass(frozen=True)
class ColumnLimits(object):

    """
    **Description**

    Bounds on the number of columns of every dataset, in aggregate and
    optionally per distribution family.

    The aggregate maximum must be finite; per-family maxima may be `None`
    (unbounded).

    **Arguments**

    * **c_min** (int) - Minimum number of columns, at least 1.
    * **c_max** (int) - Maximum number of columns.
    * **per_family** (dict, *optional*, default=None) - Maps family names to
        `(minimum, maximum)` column counts; `maximum` may be None.

    **Example**
    ~~~python
    limits = ColumnLimits(2, 5, per_family={'uniform': (1, None), 'normal': (0, 2)})
    ~~~
    """

    c_min: int
    c_max: int
    per_family: dict = None

    def __post_init__(self):
        errors = []
        for name in ('c_min', 'c_max'):
            value = getattr(self, name)
            if value is None or isinstance(value, bool) or value != value \
                    or value in (float('inf'), float('-inf')) or int(value) != value:
                errors.append('col_limits.' + name + ': must be a finite integer, got ' + repr(value))
        if not errors:
            if self.c_min < 1:
                errors.append('col_limits.c_min: must be at least 1')
            if self.c_min > self.c_max:
                errors.append('col_limits: c_min must not exceed c_max')
        per_family = {}
        for family, bounds in (self.per_family or {}).items():
            try:
                lo, hi = bounds
            except (TypeError, ValueError):
                errors.append('col_limits.per_family.' + family + ': expected [minimum, maximum]')
                continue
            if hi is not None and hi == float('inf'):
                hi = None
            if int(lo) != lo or lo < 0 or (hi is not None and (int(hi) != hi or hi < lo)):
                errors.append('col_limits.per_family.' + family
                              + ': expected integers with 0 <= minimum <= maximum')
                continue
            per_family[family] = (int(lo), None if hi is None else int(hi))
        if errors:
            raise ConfigurationError(errors)
        object.__setattr__(self, 'c_min', int(self.c_min))
        object.__setattr__(self, 'c_max', int(self.c_max))
        object.__setattr__(self, 'per_family', per_family)

    def family_bounds(self, name):
        return self.per_family.get(name, (0, None))

    def feasible_range(self, families, weights):
        """
        **Description**

        Returns the inclusive range of column counts that satisfy both the
        aggregate and the per-family limits.

        Families with zero weight are never sampled, so they only contribute
        their mandatory minimum.

        **Arguments**

        * **families** (list) - The `FamilySpec`s of the run.
        * **weights** (array) - Their sampling weights.

        **Return**

        * (tuple) - `(lowest, highest)` feasible column counts.
        """
        names = [f.name for f in families]
        unknown = sorted(set(self.per_family) - set(names))
        if unknown:
            raise ConfigurationError('col_limits.per_family: unknown families ' + ', '.join(unknown))
        lowest = self.c_min
        highest = self.c_max
        total_min = 0
        total_max = 0
        unbounded = False
        for name, weight in zip(names, weights):
            lo, hi = self.family_bounds(name)
            total_min += lo
            if weight <= 0:
                total_max += lo
            elif hi is None:
                unbounded = True
            else:
                total_max += hi
        lowest = max(lowest, total_min)
        if not unbounded:
            highest = min(highest, total_max)
        if lowest > highest:
            raise ConfigurationError('col_limits: no column count satisfies both the aggregate limits ('
                                     + str(self.c_min) + ', ' + str(self.c_max)
                                     + ') and the per-family limits')
        return lowest, highest

    def to_dict(self):
        return {
            'aggregate': [self.c_min, self.c_max],
            'per_family': {k: list(v) for k, v in sorted(self.per_family.items())},
        }

#!/usr/bin/env python3

"""
Experiment configuration files.

~~~yaml
seed: 0
size: 100
max_iter: 1000
row_limits: [3, 100]
col_limits:
  aggregate: [2, 2]
  per_family: {uniform: [0, null]}
families:
  - name: uniform
    limits: {a: [0, 1], b: [0, 1]}
    max_subtypes: 1
    weight: 1.0
best_prop: 0.2
lucky_prop: 0.0
mutation_prob: 0.01
shrinkage: null
fitness:
  name: inertia
  params: {k: 2}
stopping: {patience: 100}        # or {spread: 1.0e-6}
mutation_decay: {rate: 0.99, minimum: 0.001}
root: out/inertia
retention: {every: 1}
~~~

Only `size`, `row_limits`, `col_limits`, `families` and `fitness` are required.
"""

import os
import dataclasses

import yaml

from edo.utils import ConfigurationError
from edo.distributions import get_family
from edo.data import RowLimits, ColumnLimits
from edo.evolution import EdoConfig, NoImprovement, FitnessSpread, MutationDecay
from edo.clustering import get_fitness

ROOT_ENVIRONMENT_VARIABLE = 'EDO_ROOT'

_REQUIRED = ('size', 'row_limits', 'col_limits', 'families', 'fitness')
_OPTIONAL = ('seed', 'max_iter', 'best_prop', 'lucky_prop', 'mutation_prob', 'shrinkage',
             'stopping', 'mutation_decay', 'root', 'retention')
_FAMILY_KEYS = ('name', 'limits', 'max_subtypes', 'weight')


@dataclasses.dataclass
class ExperimentConfig(object):

    """
    **Description**

    A validated experiment: the run parameters, the fitness, where to write
    the archive and how much of it to keep.

    **Arguments**

    * **edo** (EdoConfig) - Parameters of the run.
    * **fitness_name** (str) - A registered fitness, see `edo.clustering.list_fitnesses()`.
    * **fitness_params** (dict) - Parameters of the fitness.
    * **root** (str, *optional*, default=None) - Archive root.
    * **retention** (int, *optional*, default=1) - Write every `retention`-th epoch, plus the last.
    """

    edo: EdoConfig
    fitness_name: str
    fitness_params: dict
    root: str = None
    retention: int = 1

    def fitness(self):
        return get_fitness(self.fitness_name, **self.fitness_params)

    def to_dict(self):
        return {
            'edo': self.edo.to_dict(),
            'fitness': {'name': self.fitness_name, 'params': self.fitness().params()},
            'root': self.root,
            'retention': {'every': self.retention},
        }


def _pair(value, field, errors):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        errors.append(field + ': expected [minimum, maximum], got ' + repr(value))
        return None
    return tuple(value)


def _collect(errors, field, build):
    try:
        return build()
    except ConfigurationError as error:
        errors.extend(field + ': ' + message if not message.startswith(field) else message
                      for message in error.errors)
    except (TypeError, ValueError) as error:
        errors.append(field + ': ' + str(error))
    return None


def _families(entries, errors):
    families = []
    weights = []
    if not isinstance(entries, list) or not entries:
        errors.append('families: expected a non-empty list')
        return families, weights
    for position, entry in enumerate(entries):
        field = 'families[' + str(position) + ']'
        if not isinstance(entry, dict) or 'name' not in entry:
            errors.append(field + ': expected a mapping with a name')
            continue
        unknown = sorted(set(entry) - set(_FAMILY_KEYS))
        if unknown:
            errors.append(field + ': unknown keys ' + ', '.join(unknown))
            continue
        family = _collect(errors, field, lambda: get_family(entry['name'],
                                                            limits=entry.get('limits'),
                                                            max_subtypes=entry.get('max_subtypes', 1)))
        if family is not None:
            families.append(family)
            weights.append(entry.get('weight', 1.0))
    return families, weights


def _col_limits(value, errors):
    if isinstance(value, dict):
        unknown = sorted(set(value) - {'aggregate', 'per_family'})
        if unknown:
            errors.append('col_limits: unknown keys ' + ', '.join(unknown))
            return None
        aggregate = _pair(value.get('aggregate'), 'col_limits.aggregate', errors)
        per_family = value.get('per_family')
    else:
        aggregate = _pair(value, 'col_limits', errors)
        per_family = None
    if aggregate is None:
        return None
    return _collect(errors, 'col_limits', lambda: ColumnLimits(*aggregate, per_family=per_family))


def _stopping(value, errors):
    if value is None:
        return None
    if not isinstance(value, dict) or len(value) != 1 or not set(value) <= {'patience', 'spread'}:
        errors.append('stopping: expected either {patience: K} or {spread: tolerance}')
        return None
    if 'patience' in value:
        return _collect(errors, 'stopping.patience', lambda: NoImprovement(value['patience']))
    return _collect(errors, 'stopping.spread', lambda: FitnessSpread(value['spread']))


def _mutation_decay(value, errors):
    if value is None:
        return None
    if not isinstance(value, dict) or 'rate' not in value or not set(value) <= {'rate', 'minimum'}:
        errors.append('mutation_decay: expected {rate: r, minimum: m}')
        return None
    return _collect(errors, 'mutation_decay',
                    lambda: MutationDecay(value['rate'], value.get('minimum', 0.0)))


def _retention(value, errors):
    if value is None:
        return 1
    every = value.get('every') if isinstance(value, dict) else None
    if isinstance(every, bool) or not isinstance(every, int) or every < 1 or set(value) != {'every'}:
        errors.append('retention: expected {every: j} with j a positive integer')
        return 1
    return every


def experiment_from_dict(document):
    """
    **Description**

    Validates a parsed configuration file and builds the `ExperimentConfig`.

    Every problem is reported at once, in a `ConfigurationError` listing one
    message per field.
    """
    if not isinstance(document, dict):
        raise ConfigurationError('configuration: expected a mapping at the top level')
    errors = []
    for key in _REQUIRED:
        if key not in document:
            errors.append(key + ': missing')
    unknown = sorted(set(document) - set(_REQUIRED) - set(_OPTIONAL))
    for key in unknown:
        errors.append(key + ': unknown key')

    row_pair = _pair(document.get('row_limits'), 'row_limits', errors) if 'row_limits' in document else None
    row_limits = None
    if row_pair is not None:
        row_limits = _collect(errors, 'row_limits', lambda: RowLimits(*row_pair))
    col_limits = _col_limits(document['col_limits'], errors) if 'col_limits' in document else None
    families, weights = _families(document.get('families'), errors) if 'families' in document else ([], [])

    fitness_name, fitness_params = None, {}
    fitness = document.get('fitness')
    if 'fitness' in document:
        if not isinstance(fitness, dict) or 'name' not in fitness \
                or not set(fitness) <= {'name', 'params'}:
            errors.append('fitness: expected {name: ..., params: {...}}')
        else:
            fitness_name = fitness['name']
            fitness_params = dict(fitness.get('params') or {})
            _collect(errors, 'fitness', lambda: get_fitness(fitness_name, **fitness_params))

    stop = _stopping(document.get('stopping'), errors)
    schedule = _mutation_decay(document.get('mutation_decay'), errors)
    retention = _retention(document.get('retention'), errors)
    root = document.get('root')
    if root is not None and not isinstance(root, str):
        errors.append('root: expected a path')

    if errors:
        raise ConfigurationError(errors)

    edo = EdoConfig(size=document['size'],
                    row_limits=row_limits,
                    col_limits=col_limits,
                    families=families,
                    weights=weights,
                    max_iter=document.get('max_iter', 100),
                    best_prop=document.get('best_prop', 0.25),
                    lucky_prop=document.get('lucky_prop', 0.0),
                    mutation_prob=document.get('mutation_prob', 0.01),
                    shrinkage=document.get('shrinkage'),
                    seed=document.get('seed', 0),
                    stop=stop,
                    mutation_schedule=schedule)
    edo.validate()
    return ExperimentConfig(edo, fitness_name, fitness_params, root, retention)


def load_experiment(path):
    """Reads and validates a YAML experiment file."""
    try:
        with open(path, 'r') as config_file:
            document = yaml.safe_load(config_file)
    except OSError as error:
        raise ConfigurationError('config: cannot read ' + str(path) + ' (' + error.strerror + ')')
    except yaml.YAMLError as error:
        raise ConfigurationError('config: ' + str(path) + ' is not valid YAML (' + str(error) + ')')
    return experiment_from_dict(document)


def resolve_root(flag=None, configured=None):
    """The archive root: the command-line flag, else the config file, else `EDO_ROOT`."""
    if flag is not None:
        return flag
    if configured is not None:
        return configured
    return os.environ.get(ROOT_ENVIRONMENT_VARIABLE)

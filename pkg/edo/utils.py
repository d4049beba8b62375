#!/usr/bin/env python3

"""
Shared exceptions and small helpers used across edo.
"""

import os
import hashlib
import argparse
import dataclasses
import tempfile

import numpy as np

__all__ = [
    'EdoError',
    'ConfigurationError',
    'FitnessError',
    'ArchiveError',
    'IncompleteEpochError',
    'ArchiveExistsError',
    'EpochNotFoundError',
    'SilhouetteUndefinedError',
    'ScheduleError',
    'evaluation_rng',
    'atomic_write',
    'flatten_config',
]


class EdoError(Exception):
    """Root of every error raised by edo."""


class ConfigurationError(EdoError, ValueError):

    """
    **Description**

    Raised when parameters, limits, or configuration files are invalid.

    The offending fields are listed in `errors`, one human-readable message per
    field, so that a whole configuration can be reported in one go.

    **Arguments**

    * **errors** (str or list) - A message, or a list of field-level messages.
    """

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super(ConfigurationError, self).__init__('; '.join(self.errors))


class FitnessError(EdoError, RuntimeError):

    def __init__(self, epoch, index, cause):
        self.epoch = epoch
        self.index = index
        msg = 'fitness raised on individual ' + str(index)
        msg += ' of epoch ' + str(epoch) + ': ' + repr(cause)
        super(FitnessError, self).__init__(msg)


class ArchiveError(EdoError, IOError):
    pass


class IncompleteEpochError(ArchiveError):

    def __init__(self, epoch, path):
        self.epoch = epoch
        self.path = path
        msg = 'incomplete epoch ' + str(epoch) + ': missing or corrupt ' + str(path)
        super(IncompleteEpochError, self).__init__(msg)


class ArchiveExistsError(ArchiveError):

    def __init__(self, root):
        self.root = root
        msg = 'refusing to overwrite the archive in ' + str(root) + ' (manifest.json exists)'
        super(ArchiveExistsError, self).__init__(msg)


class EpochNotFoundError(ArchiveError):
    pass


class SilhouetteUndefinedError(EdoError, ValueError):
    pass


class ScheduleError(EdoError, RuntimeError):
    """Raised when a mutation schedule returns a probability outside of [0, 1] during a run."""


def evaluation_rng(seed, values):
    """
    **Description**

    Returns the random generator handed to a fitness function evaluating the
    dataset `values`.

    The stream only depends on the run seed and on the content of the
    dataset, so that serial and parallel evaluations see exactly the same
    numbers, and re-evaluating an archived individual reproduces its fitness.

    **Arguments**

    * **seed** (int) - The run seed.
    * **values** (array) - The dataset values.

    **Example**
    ~~~python
    rng = evaluation_rng(0, individual.dataset.values)
    value = fitness(individual, rng)
    ~~~
    """
    values = np.ascontiguousarray(values, dtype=float)
    digest = hashlib.sha256(str(values.shape).encode('ascii') + values.tobytes()).digest()
    words = np.frombuffer(digest[:16], dtype=np.uint32).tolist()
    return np.random.default_rng([int(seed)] + words)


def atomic_write(path, text):
    """Writes `text` to `path` through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', newline='') as tmp:
            tmp.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def flatten_config(args, prefix=None):
    """
    **Description**

    Flattens nested dicts, dataclasses and argparse namespaces into a single
    dict whose keys are dotted paths.

    **Example**
    ~~~python
    flatten_config({'fitness': {'name': 'inertia', 'params': {'k': 2}}})
    # {'fitness.name': 'inertia', 'fitness.params.k': 2}
    ~~~
    """
    flat_args = dict()
    if isinstance(args, argparse.Namespace):
        return flatten_config(vars(args), prefix=prefix)
    if dataclasses.is_dataclass(args) and not isinstance(args, type):
        args = {f.name: getattr(args, f.name) for f in dataclasses.fields(args)}
    if not isinstance(args, dict):
        flat_args[prefix] = args
        return flat_args
    for key, value in args.items():
        child = str(key) if prefix is None else prefix + '.' + str(key)
        if isinstance(value, dict) and len(value) == 0:
            flat_args[child] = value
            continue
        flat_args.update(flatten_config(value, prefix=child))
    return flat_args

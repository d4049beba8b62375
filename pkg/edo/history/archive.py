#!/usr/bin/env python3

"""
On-disk archive of a run.

~~~
root/
    manifest.json
    epoch_0/
        individual_0.csv
        individual_0.meta.json
        ...
        fitness.csv
        subtypes.json
        generation.json
    epoch_1/
    ...
~~~

`generation.json` is written last, so an epoch directory without it is
incomplete.
"""

import os
import re
import json
import logging
import dataclasses

import numpy as np
import pandas as pd

from edo.utils import (
    ArchiveError,
    ArchiveExistsError,
    IncompleteEpochError,
    EpochNotFoundError,
    atomic_write,
)
from edo.distributions import FamilySpec, Subtype, get_family
from edo.data import write_individual, read_individual

logger = logging.getLogger(__name__)

MANIFEST = 'manifest.json'
FITNESS = 'fitness.csv'
SUBTYPES = 'subtypes.json'
GENERATION = 'generation.json'

_EPOCH_DIR = re.compile(r'^epoch_(\d+)$')


def _to_builtin(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return repr(value)


def dump_json(document):
    return json.dumps(document, indent=2, sort_keys=True, default=_to_builtin) + '\n'


def epoch_dir(root, epoch):
    return os.path.join(root, 'epoch_' + str(epoch))


def individual_paths(root, epoch, index):
    base = os.path.join(epoch_dir(root, epoch), 'individual_' + str(index))
    return base + '.csv', base + '.meta.json'


class GenerationRecord(object):

    """
    **Description**

    One epoch of a run: the population, its fitnesses, the limits of every
    live subtype, and the mutation probability used to create the population.

    **Arguments**

    * **epoch** (int) - Epoch index.
    * **individuals** (list) - The population.
    * **fitnesses** (array) - One fitness per individual.
    * **subtype_state** (dict) - `family -> subtype_id -> parameter -> [lower, upper]`.
    * **mutation_prob** (float) - Mutation probability in effect.
    """

    def __init__(self, epoch, individuals, fitnesses, subtype_state, mutation_prob):
        self.epoch = int(epoch)
        self.individuals = list(individuals)
        self.fitnesses = np.asarray(fitnesses, dtype=float)
        self.subtype_state = subtype_state
        self.mutation_prob = float(mutation_prob)
        assert len(self.individuals) == len(self.fitnesses), 'one fitness per individual expected'

    def __len__(self):
        return len(self.individuals)

    def order(self):
        return np.argsort(self.fitnesses, kind='stable')

    def best(self):
        index = int(self.order()[0])
        return self.individuals[index], float(self.fitnesses[index])

    def __eq__(self, other):
        return (isinstance(other, GenerationRecord)
                and self.epoch == other.epoch
                and self.individuals == other.individuals
                and np.array_equal(self.fitnesses, other.fitnesses)
                and self.subtype_state == other.subtype_state
                and self.mutation_prob == other.mutation_prob)


@dataclasses.dataclass
class RunManifest(object):

    """
    **Description**

    Everything needed to re-run an archived experiment: the configuration,
    the seed, the fitness and the engine version, plus why the run ended and
    which epochs were written.
    """

    config: dict
    seed: int
    fitness: dict
    engine_version: str
    stop_reason: str = 'running'
    epochs: list = dataclasses.field(default_factory=list)
    retention: int = 1

    def to_json(self):
        return dump_json(dataclasses.asdict(self))

    @classmethod
    def from_json(cls, text):
        document = json.loads(text)
        fields = {f.name for f in dataclasses.fields(cls)}
        return cls(**{k: v for k, v in document.items() if k in fields})

    def family_specs(self):
        return {entry['name']: FamilySpec.from_dict(entry)
                for entry in self.config.get('families', [])}


def read_manifest(root):
    path = os.path.join(root, MANIFEST)
    if not os.path.exists(path):
        raise ArchiveError('no ' + MANIFEST + ' in ' + str(root))
    with open(path, 'r') as manifest_file:
        return RunManifest.from_json(manifest_file.read())


def write_manifest(root, manifest):
    atomic_write(os.path.join(root, MANIFEST), manifest.to_json())


def write_generation(root, record):
    """
    **Description**

    Writes a generation to `root/epoch_<t>/`, one file at a time through a
    temporary file and a rename.

    Infinite fitness values are written as the token `inf`.

    **Arguments**

    * **root** (str) - Archive root.
    * **record** (GenerationRecord) - The generation to write.
    """
    directory = epoch_dir(root, record.epoch)
    os.makedirs(directory, exist_ok=True)
    for index, individual in enumerate(record.individuals):
        write_individual(individual, *individual_paths(root, record.epoch, index))
    fitness = pd.DataFrame({
        'individual_index': np.arange(len(record), dtype=int),
        'fitness': record.fitnesses,
    })
    atomic_write(os.path.join(directory, FITNESS), fitness.to_csv(index=False, lineterminator='\n'))
    atomic_write(os.path.join(directory, SUBTYPES), dump_json(record.subtype_state))
    atomic_write(os.path.join(directory, GENERATION), dump_json({
        'epoch': record.epoch,
        'mutation_prob': record.mutation_prob,
        'n_individuals': len(record),
    }))


def list_epochs(root):
    """Returns the sorted indices of the complete epochs in an archive."""
    if not os.path.isdir(root):
        raise ArchiveError('no archive at ' + str(root))
    epochs = []
    for name in os.listdir(root):
        match = _EPOCH_DIR.match(name)
        if match and os.path.exists(os.path.join(root, name, GENERATION)):
            epochs.append(int(match.group(1)))
    return sorted(epochs)


def read_fitnesses(root, epoch):
    path = os.path.join(epoch_dir(root, epoch), FITNESS)
    if not os.path.exists(path):
        raise IncompleteEpochError(epoch, path)
    try:
        frame = pd.read_csv(path, float_precision='round_trip')
        fitnesses = frame['fitness'].to_numpy(dtype=float)
    except (ValueError, KeyError, pd.errors.ParserError):
        raise IncompleteEpochError(epoch, path)
    return fitnesses


def _read_json(epoch, path):
    if not os.path.exists(path):
        raise IncompleteEpochError(epoch, path)
    try:
        with open(path, 'r') as json_file:
            return json.load(json_file)
    except ValueError:
        raise IncompleteEpochError(epoch, path)


def load_generation(root, epoch, families=None):
    """
    **Description**

    Reads a generation back from the archive.

    **Arguments**

    * **root** (str) - Archive root.
    * **epoch** (int) - Epoch index.
    * **families** (dict, *optional*, default=None) - Maps family names to
        `FamilySpec`s. Read from the manifest when omitted; registered
        families with default limits are used when there is no manifest.

    **Return**

    * (GenerationRecord) - The generation.

    **Example**
    ~~~python
    record = load_generation('out', epoch=10)
    best, fitness = record.best()
    ~~~
    """
    directory = epoch_dir(root, epoch)
    if not os.path.isdir(directory):
        raise EpochNotFoundError('epoch ' + str(epoch) + ' is not in the archive at ' + str(root))
    if families is None:
        families = {}
        if os.path.exists(os.path.join(root, MANIFEST)):
            families = read_manifest(root).family_specs()
    generation = _read_json(epoch, os.path.join(directory, GENERATION))
    state = _read_json(epoch, os.path.join(directory, SUBTYPES))
    fitnesses = read_fitnesses(root, epoch)
    if len(fitnesses) != generation.get('n_individuals'):
        raise IncompleteEpochError(epoch, os.path.join(directory, FITNESS))

    subtypes = {}

    def resolve_subtype(name, subtype_id):
        key = (name, subtype_id)
        if key not in subtypes:
            family = families.get(name) or get_family(name)
            limits = state.get(name, {}).get(str(subtype_id))
            if limits is not None:
                limits = [limits[p] for p in family.parameter_names]
            subtypes[key] = Subtype(family, subtype_id, limits)
        return subtypes[key]

    individuals = []
    for index in range(len(fitnesses)):
        csv_path, meta_path = individual_paths(root, epoch, index)
        for path in (csv_path, meta_path):
            if not os.path.exists(path):
                raise IncompleteEpochError(epoch, path)
        try:
            individuals.append(read_individual(csv_path, meta_path, resolve_subtype))
        except (ValueError, KeyError, pd.errors.ParserError):
            raise IncompleteEpochError(epoch, csv_path)
    return GenerationRecord(epoch, individuals, fitnesses, state, generation['mutation_prob'])


class ArchiveWriter(object):

    """
    **Description**

    Writes the generations of a run as they are recorded, and keeps the
    manifest up to date.

    With `every=j`, only epochs `t` with `t % j == 0` are written, plus the
    final epoch when the writer is closed.

    **Arguments**

    * **root** (str) - Archive root; must not contain a manifest yet.
    * **manifest** (RunManifest) - Manifest of the run.
    * **every** (int, *optional*, default=1) - Retention interval.
    """

    def __init__(self, root, manifest, every=1):
        if int(every) != every or every < 1:
            raise ValueError('retention interval must be a positive integer, got ' + repr(every))
        self.root = root
        self.manifest = manifest
        self.every = int(every)
        self.manifest.retention = self.every
        self._pending = None

    def open(self):
        if os.path.exists(os.path.join(self.root, MANIFEST)):
            raise ArchiveExistsError(self.root)
        os.makedirs(self.root, exist_ok=True)
        write_manifest(self.root, self.manifest)
        return self

    def write(self, record):
        if record.epoch % self.every == 0:
            write_generation(self.root, record)
            self.manifest.epochs.append(record.epoch)
            write_manifest(self.root, self.manifest)
            self._pending = None
        else:
            logger.debug('epoch %d not retained', record.epoch)
            self._pending = record

    def close(self, stop_reason):
        if self._pending is not None:
            write_generation(self.root, self._pending)
            self.manifest.epochs.append(self._pending.epoch)
            self._pending = None
        self.manifest.stop_reason = stop_reason
        write_manifest(self.root, self.manifest)

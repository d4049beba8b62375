#!/usr/bin/env python3

import functools
import logging
import multiprocessing

import numpy as np

from edo._version import __version__
from edo.utils import ConfigurationError, ScheduleError
from edo.distributions import FamilySpec, SearchSpace, get_family
from edo.data import RowLimits, ColumnLimits
from edo.history.archive import ArchiveWriter, GenerationRecord, RunManifest
from .config import EdoConfig
from .selection import select_indices
from .population import (
    create_initial_population,
    create_new_population,
    evaluate_population,
)

logger = logging.getLogger(__name__)


class History(object):

    """
    **Description**

    The in-memory record of a run: one `GenerationRecord` per epoch, and the
    reason the run ended.
    """

    def __init__(self):
        self.records = []
        self.stop_reason = None

    def __len__(self):
        return len(self.records)

    def append(self, record):
        assert record.epoch == len(self.records), 'epochs must be recorded contiguously'
        self.records.append(record)

    @property
    def fitness_history(self):
        return [record.fitnesses for record in self.records]

    @property
    def mutation_prob(self):
        return self.records[-1].mutation_prob

    def best_fitnesses(self):
        return [float(np.min(record.fitnesses)) for record in self.records]

    def best(self):
        """Returns the fittest individual seen during the run and its fitness."""
        best = None
        for record in self.records:
            individual, fitness = record.best()
            if best is None or fitness < best[1]:
                best = (individual, fitness)
        return best


def describe_fitness(fitness):
    if hasattr(fitness, 'name') and hasattr(fitness, 'params'):
        return {'name': fitness.name, 'params': fitness.params()}
    if isinstance(fitness, functools.partial):
        described = describe_fitness(fitness.func)
        described['params'] = dict(described.get('params', {}), **fitness.keywords)
        return described
    name = getattr(fitness, '__qualname__', None) or type(fitness).__name__
    return {'name': name, 'params': {}}


def run(config, fitness, root=None, workers=1, retention=1, progress=None):
    """
    **Description**

    Runs evolutionary dataset optimisation.

    An initial population is created and evaluated. Then, for up to
    `config.max_iter` epochs: the parents are selected, the subtypes they do
    not use are retired, their subtypes are optionally shrunk, and a new
    population is created from them and evaluated. Parents keep their
    fitness. Every generation is recorded in the returned history and, when
    `root` is given, written to an archive.

    If the fitness raises, the generations recorded so far are flushed to the
    archive and a `FitnessError` is raised.

    **Arguments**

    * **config** (EdoConfig) - Parameters of the run.
    * **fitness** (callable) - Called as `fitness(individual, rng)`; lower is better.
    * **root** (str, *optional*, default=None) - Archive root; nothing is written when None.
    * **workers** (int, *optional*, default=1) - Number of processes evaluating fitness.
    * **retention** (int, *optional*, default=1) - Write every `retention`-th epoch, plus the last.
    * **progress** (callable, *optional*, default=None) - Called with each new `GenerationRecord`.

    **Return**

    * (History) - All generations of the run.

    **Example**
    ~~~python
    config = EdoConfig(size=100, row_limits=RowLimits(3, 100), col_limits=ColumnLimits(2, 2),
                       families=[get_family('uniform')], max_iter=100, best_prop=0.2)
    history = edo.run(config, get_fitness('inertia', k=2), root='out')
    individual, fitness = history.best()
    ~~~
    """
    config.validate()
    if int(workers) != workers or workers < 1:
        raise ConfigurationError('workers: must be a positive integer, got ' + repr(workers))
    rng = np.random.default_rng(config.seed)
    space = SearchSpace(config.families, config.family_weights)
    history = History()
    writer = None
    if root is not None:
        manifest = RunManifest(config=config.to_dict(),
                               seed=config.seed,
                               fitness=describe_fitness(fitness),
                               engine_version=__version__)
        writer = ArchiveWriter(root, manifest, every=retention).open()
    pool = multiprocessing.Pool(workers) if workers > 1 else None
    mutation_prob = config.mutation_prob

    def record(epoch, population, fitnesses):
        generation = GenerationRecord(epoch, population, fitnesses, space.state(), mutation_prob)
        history.append(generation)
        if writer is not None:
            writer.write(generation)
        if progress is not None:
            progress(generation)

    stop_reason = 'max_iter'
    try:
        population = create_initial_population(config, space, rng)
        fitnesses = evaluate_population(population, fitness, config.seed, 0, pool=pool)
        record(0, population, fitnesses)
        for epoch in range(1, config.max_iter + 1):
            if config.stop is not None and config.stop(epoch - 1, history):
                stop_reason = 'stop hook'
                logger.warning('stopping hook ended the run after epoch %d', epoch - 1)
                break
            indices = select_indices(fitnesses, config.best_prop, config.lucky_prop, rng)
            parents = [population[i] for i in indices]
            space.prune(parents)
            if config.shrinkage is not None:
                space.shrink(parents, config.shrinkage, epoch)
            population = create_new_population(parents, config, space, rng, mutation_prob)
            offspring = evaluate_population(population[len(parents):], fitness, config.seed, epoch,
                                            pool=pool, offset=len(parents))
            fitnesses = np.concatenate([fitnesses[indices], offspring])
            record(epoch, population, fitnesses)
            if config.mutation_schedule is not None:
                mutation_prob = config.mutation_schedule(epoch, history)
                if not 0.0 <= mutation_prob <= 1.0:
                    raise ScheduleError('mutation_schedule: returned ' + repr(mutation_prob)
                                        + ', outside of [0, 1]')
    except BaseException as error:
        stop_reason = 'error: ' + str(error)
        raise
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        history.stop_reason = stop_reason
        if writer is not None:
            writer.close(stop_reason)
    return history


def _as_row_limits(limits):
    if isinstance(limits, RowLimits):
        return limits
    return RowLimits(*limits)


def _as_col_limits(limits):
    if isinstance(limits, ColumnLimits):
        return limits
    if isinstance(limits, dict):
        return ColumnLimits(*limits['aggregate'], per_family=limits.get('per_family'))
    return ColumnLimits(*limits)


def _as_family(family):
    if isinstance(family, FamilySpec):
        return family
    return get_family(family)


def run_algorithm(fitness,
                  size,
                  row_limits,
                  col_limits,
                  families,
                  weights=None,
                  max_iter=100,
                  best_prop=0.25,
                  lucky_prop=0.0,
                  mutation_prob=0.01,
                  shrinkage=None,
                  stop=None,
                  mutation_schedule=None,
                  seed=0,
                  root=None,
                  fitness_kwargs=None,
                  workers=1,
                  retention=1,
                  progress=None):
    """
    **Description**

    Keyword front-end to `run`: builds the `EdoConfig` from plain values.

    **Arguments**

    * **fitness** (callable) - Called as `fitness(individual, rng, **fitness_kwargs)`.
    * **size** (int) - Population size.
    * **row_limits** (list) - `[r_min, r_max]`, or a `RowLimits`.
    * **col_limits** (list) - `[c_min, c_max]`, `{'aggregate': [...], 'per_family': {...}}`
        or a `ColumnLimits`.
    * **families** (list) - `FamilySpec`s or registered family names.

    The remaining arguments are those of `EdoConfig` and `run`.

    **Return**

    * (History) - All generations of the run.

    **Example**
    ~~~python
    history = edo.run_algorithm(edo.clustering.get_fitness('inertia', k=2),
                                size=100,
                                row_limits=[3, 100],
                                col_limits=[2, 2],
                                families=['uniform'],
                                max_iter=100,
                                best_prop=0.2,
                                root='out')
    ~~~
    """
    if fitness_kwargs:
        fitness = functools.partial(fitness, **fitness_kwargs)
    config = EdoConfig(size=size,
                       row_limits=_as_row_limits(row_limits),
                       col_limits=_as_col_limits(col_limits),
                       families=[_as_family(f) for f in families],
                       weights=weights,
                       max_iter=max_iter,
                       best_prop=best_prop,
                       lucky_prop=lucky_prop,
                       mutation_prob=mutation_prob,
                       shrinkage=shrinkage,
                       seed=seed,
                       stop=stop,
                       mutation_schedule=mutation_schedule)
    return run(config, fitness, root=root, workers=workers, retention=retention, progress=progress)

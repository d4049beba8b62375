#!/usr/bin/env python3

import os
import sys
import logging

import numpy as np

from edo.utils import ConfigurationError, flatten_config
from edo.evolution import run
from edo.history import coverage, list_epochs, representatives, summarise
from .config import load_experiment, resolve_root

logger = logging.getLogger(__name__)


def _write_table(table, out):
    text = table.to_csv(index=False, lineterminator='\n')
    if out is None or out == '-':
        sys.stdout.write(text)
    else:
        with open(out, 'w', newline='') as out_file:
            out_file.write(text)
        logger.info('wrote %d rows to %s', len(table), out)


def _archive_root(args):
    root = resolve_root(args.root)
    if root is None:
        raise ConfigurationError('root: no archive given, use --root or set EDO_ROOT')
    return root


def print_progress(record):
    fitnesses = record.fitnesses
    finite = fitnesses[np.isfinite(fitnesses)]
    median = float(np.median(finite)) if len(finite) else float('inf')
    best, best_fitness = record.best()
    print('epoch ' + str(record.epoch)
          + ': best=' + format(best_fitness, '.6g')
          + ' median=' + format(median, '.6g')
          + ' shape=' + str(best.dataset.n_rows) + 'x' + str(best.dataset.n_cols), flush=True)


def cmd_run(args):
    """Runs the experiment of a configuration file."""
    experiment = load_experiment(args.config)
    if args.seed is not None:
        experiment.edo.seed = args.seed
        experiment.edo.validate()
    experiment.root = resolve_root(args.root, experiment.root)
    if args.dry_run:
        for key, value in sorted(flatten_config(experiment.to_dict()).items()):
            print(key + ': ' + str(value))
        return 0
    if experiment.root is None:
        raise ConfigurationError('root: no archive given, use --root, the root key or EDO_ROOT')
    workers = args.workers or os.cpu_count() or 1
    logger.info('running %s into %s with %d workers', args.config, experiment.root, workers)
    history = run(experiment.edo,
                  experiment.fitness(),
                  root=experiment.root,
                  workers=workers,
                  retention=experiment.retention,
                  progress=print_progress)
    logger.info('run ended after epoch %d (%s)', len(history) - 1, history.stop_reason)
    return 0


def cmd_summarise(args):
    """Writes the per-epoch progression table of an archive."""
    _write_table(summarise(_archive_root(args), interval=args.interval), args.out)
    return 0


def cmd_representatives(args):
    """Exports the best, median and worst individuals of an epoch."""
    root = _archive_root(args)
    epoch = args.epoch
    if epoch is None:
        epochs = list_epochs(root)
        if not epochs:
            raise ConfigurationError('epoch: the archive at ' + root + ' holds no complete epoch')
        epoch = epochs[-1]
    table = representatives(root, epoch, args.out)
    logger.info('exported %d representatives of epoch %d to %s', len(table), epoch, args.out)
    return 0


def cmd_coverage(args):
    """Writes every point of every individual at regular epochs."""
    interval = args.interval if args.interval is not None else 50
    _write_table(coverage(_archive_root(args), interval=interval), args.out)
    return 0

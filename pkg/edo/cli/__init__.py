#!/usr/bin/env python3

r"""
Command-line front-end.

~~~
edo run --config configs/inertia_small.yml --root out/inertia
edo summarise --root out/inertia --interval 100 --out progression.csv
edo representatives --root out/inertia --epoch 1000 --out out/representatives
edo coverage --root out/inertia --interval 50 --out coverage.csv
~~~

Exit codes: 0 on success, 1 on usage or configuration errors, 2 on runtime
failures.
"""

import sys
import argparse
import logging

from edo._version import __version__
from edo.utils import ArchiveExistsError, ConfigurationError
from .config import ExperimentConfig, experiment_from_dict, load_experiment, resolve_root
from .commands import cmd_run, cmd_summarise, cmd_representatives, cmd_coverage

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, self.prog + ': error: ' + message + '\n')


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected a positive integer, got ' + text)
    return value


def build_parser():
    parser = _ArgumentParser(prog='edo', description='Evolutionary dataset optimisation.')
    parser.add_argument('--version', action='version', version='edo ' + __version__)
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    run = commands.add_parser('run', help='run an experiment')
    run.add_argument('--config', required=True, help='YAML experiment file')
    run.add_argument('--root', help='archive root (overrides the config file and EDO_ROOT)')
    run.add_argument('--seed', type=int, help='overrides the seed of the config file')
    run.add_argument('--workers', type=_positive_int, default=None,
                     help='fitness evaluation processes (default: number of cores, 1 is serial)')
    run.add_argument('--dry-run', action='store_true', help='print the resolved configuration and exit')
    run.set_defaults(handler=cmd_run)

    summary = commands.add_parser('summarise', help='per-epoch progression table')
    summary.add_argument('--root', help='archive root (default: EDO_ROOT)')
    summary.add_argument('--interval', type=_positive_int, help='only epochs that are multiples of this')
    summary.add_argument('--out', help='output CSV (default: stdout)')
    summary.set_defaults(handler=cmd_summarise)

    reps = commands.add_parser('representatives', help='best, median and worst individuals of an epoch')
    reps.add_argument('--root', help='archive root (default: EDO_ROOT)')
    reps.add_argument('--epoch', type=int, help='epoch to export (default: the last one)')
    reps.add_argument('--out', required=True, help='output directory')
    reps.set_defaults(handler=cmd_representatives)

    cover = commands.add_parser('coverage', help='all points of all individuals at regular epochs')
    cover.add_argument('--root', help='archive root (default: EDO_ROOT)')
    cover.add_argument('--interval', type=_positive_int, help='epoch interval (default: 50)')
    cover.add_argument('--out', help='output CSV (default: stdout)')
    cover.set_defaults(handler=cmd_coverage)
    return parser


def main(argv=None):
    """
    **Description**

    Entry point of the `edo` command.

    **Arguments**

    * **argv** (list, *optional*, default=None) - Command-line arguments; `sys.argv[1:]` when None.

    **Return**

    * (int) - The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s - %(levelname)s - %(message)s')
    try:
        return args.handler(args)
    except (ConfigurationError, ArchiveExistsError) as error:
        sys.stderr.write('edo: error: ' + str(error) + '\n')
        return EXIT_USAGE
    except Exception as error:
        logger.debug('command failed', exc_info=True)
        sys.stderr.write('edo: ' + args.command + ' failed: ' + str(error) + '\n')
        return EXIT_FAILURE

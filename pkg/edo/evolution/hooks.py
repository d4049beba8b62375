#!/usr/bin/env python3

"""
Reference stopping and mutation-probability hooks.

A stopping hook is called as `hook(epoch, history)` once the population of
`epoch` has been recorded, and ends the run by returning True. A mutation
schedule is called the same way and returns the mutation probability used
to create the next generation.
"""

import numpy as np


class NoImprovement(object):

    """
    **Description**

    Stops the run once the best fitness has not improved for `patience`
    consecutive epochs.

    **Arguments**

    * **patience** (int) - Number of epochs without improvement tolerated.

    **Example**
    ~~~python
    config.stop = NoImprovement(patience=50)
    history = edo.run(config, fitness)
    ~~~
    """

    def __init__(self, patience):
        if int(patience) != patience or patience < 1:
            raise ValueError('patience must be a positive integer, got ' + repr(patience))
        self.patience = int(patience)

    def __call__(self, epoch, history):
        bests = history.best_fitnesses()
        if len(bests) <= self.patience:
            return False
        return min(bests[-self.patience:]) >= min(bests[:-self.patience])

    def to_dict(self):
        return {'name': 'no_improvement', 'patience': self.patience}


class FitnessSpread(object):

    """
    **Description**

    Stops the run once the interquartile range of the finite fitness values of
    the last generation falls below `tolerance`, i.e. once the population has
    converged as a whole.

    **Arguments**

    * **tolerance** (float) - Spread below which the run stops.
    """

    def __init__(self, tolerance):
        if not tolerance > 0:
            raise ValueError('tolerance must be positive, got ' + repr(tolerance))
        self.tolerance = float(tolerance)

    def __call__(self, epoch, history):
        fitnesses = np.asarray(history.fitness_history[-1], dtype=float)
        finite = fitnesses[np.isfinite(fitnesses)]
        if len(finite) < 2:
            return False
        q1, q3 = np.percentile(finite, [25, 75])
        return (q3 - q1) < self.tolerance

    def to_dict(self):
        return {'name': 'fitness_spread', 'tolerance': self.tolerance}


class MutationDecay(object):

    """
    **Description**

    Multiplies the mutation probability by `rate` after every epoch, without
    going below `minimum`.

    **Arguments**

    * **rate** (float) - Decay factor in [0, 1].
    * **minimum** (float, *optional*, default=0.0) - Lower bound on the probability.
    """

    def __init__(self, rate, minimum=0.0):
        if not 0.0 <= rate <= 1.0:
            raise ValueError('rate must lie in [0, 1], got ' + repr(rate))
        if not 0.0 <= minimum <= 1.0:
            raise ValueError('minimum must lie in [0, 1], got ' + repr(minimum))
        self.rate = float(rate)
        self.minimum = float(minimum)

    def __call__(self, epoch, history):
        return max(self.minimum, history.mutation_prob * self.rate)

    def to_dict(self):
        return {'name': 'mutation_decay', 'rate': self.rate, 'minimum': self.minimum}

#!/usr/bin/env python3

from ._version import __version__
from . import distributions
from . import data
from . import evolution
from . import clustering
from . import geometry
from . import history
from .utils import *
from .evolution import EdoConfig, History, run, run_algorithm

#!/usr/bin/env python3

r"""
The archive of a run, and the analyses computed from it.
"""

from .archive import (
    GenerationRecord,
    RunManifest,
    ArchiveWriter,
    write_generation,
    load_generation,
    list_epochs,
    read_manifest,
    read_fitnesses,
)
from .summary import summarise, coverage, representative_indices
from .reports import representatives, analyse_individual, cluster_convexities

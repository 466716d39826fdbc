"""Reverse-compatibility machinery and the counterexample fixture."""

from src.structure.compatibility import (
    PairReport,
    SharedSubpath,
    SharedSubpathDecomposition,
    StructureReport,
    first_violation,
    is_general_reverse_compatible,
    is_path_reverse_compatible,
    is_reverse_compatible,
    rank,
    rewire_step,
    rewire_until_compatible,
    shared_subpaths,
    structure_report,
)
from src.structure.counterexample import (
    COUNTEREXAMPLE_LABELS,
    build_counterexample,
    counterexample_paths,
    counterexample_solution,
)

__all__ = [
    "SharedSubpath",
    "SharedSubpathDecomposition",
    "shared_subpaths",
    "is_path_reverse_compatible",
    "is_reverse_compatible",
    "is_general_reverse_compatible",
    "rank",
    "first_violation",
    "rewire_step",
    "rewire_until_compatible",
    "PairReport",
    "StructureReport",
    "structure_report",
    "COUNTEREXAMPLE_LABELS",
    "build_counterexample",
    "counterexample_paths",
    "counterexample_solution",
]

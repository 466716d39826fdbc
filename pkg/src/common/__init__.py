"""Common types, configuration, and exceptions for the 2-SCSS toolkit.

This module provides the weight arithmetic, configuration models, and exception
hierarchy shared by every other package.
"""

from src.common.config import OracleLimits, SolverConfig
from src.common.exceptions import (
    DemandShapeError,
    FlowInfeasibleError,
    GridTilingError,
    InfeasibleError,
    InstanceFormatError,
    InvalidInstanceError,
    OracleLimitExceeded,
    ReplayError,
    StructureError,
    TimeBudgetExceeded,
    WalkError,
    WeightOverflowError,
)
from src.common.types import MAX_WEIGHT, Weight, checked_add, checked_mul, checked_sum

__all__ = [
    # Types
    "Weight",
    "MAX_WEIGHT",
    "checked_add",
    "checked_mul",
    "checked_sum",
    # Configuration
    "SolverConfig",
    "OracleLimits",
    # Exceptions
    "InstanceFormatError",
    "InvalidInstanceError",
    "WalkError",
    "WeightOverflowError",
    "InfeasibleError",
    "FlowInfeasibleError",
    "DemandShapeError",
    "ReplayError",
    "OracleLimitExceeded",
    "TimeBudgetExceeded",
    "StructureError",
    "GridTilingError",
]

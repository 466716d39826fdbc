"""Brute-force oracle and the min-cost flow it relies on."""

from src.oracle.flow import FlowNetwork, FlowResult, expand_unit_copies, min_cost_flow
from src.oracle.oracle import (
    OracleResult,
    enumerate_simple_paths,
    oracle_enumerate_optima,
    oracle_opt,
    oracle_solve,
)

__all__ = [
    "FlowNetwork",
    "FlowResult",
    "expand_unit_copies",
    "min_cost_flow",
    "OracleResult",
    "enumerate_simple_paths",
    "oracle_opt",
    "oracle_solve",
    "oracle_enumerate_optima",
]

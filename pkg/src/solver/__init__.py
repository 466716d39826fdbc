"""Exact solver for 2-SCSS-(k,1) and solution verification."""

from src.solver.solver import reconstruct_solution, solve, solve_with_play
from src.solver.verify import VerifyReport, verify

__all__ = [
    "solve",
    "solve_with_play",
    "reconstruct_solution",
    "verify",
    "VerifyReport",
]

"""Configuration models for solvers and the brute-force oracle."""

import os

from pydantic import BaseModel, Field

TIME_BUDGET_ENV_VAR = "SCSS_TIME_BUDGET_SECS"


class SolverConfig(BaseModel):
    """Configuration for the token-game solver.

    All configuration is passed into solver calls explicitly; library code never reads the
    environment on its own. The CLI builds this model with `from_env()`.

    Attributes:
        time_budget_secs: Wall-clock cap for a single solve (None means unlimited)
        log_progress_every: Number of settled states between progress log lines

    Example:
        ```python
        config = SolverConfig(time_budget_secs=30)
        solution = solve(instance, config=config)
        ```
    """

    time_budget_secs: float | None = Field(
        default=None, gt=0, description="Wall-clock budget in seconds (optional)"
    )
    log_progress_every: int = Field(
        default=100_000, gt=0, description="Settled states between progress log lines"
    )

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "SolverConfig":
        """Build a config from SCSS_TIME_BUDGET_SECS if it is set.

        Args:
            environ: Mapping to read from (defaults to os.environ)

        Returns:
            SolverConfig with the time budget taken from the environment
        """
        env = os.environ if environ is None else environ
        raw = env.get(TIME_BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        return cls(time_budget_secs=float(raw))


class OracleLimits(BaseModel):
    """Limits for the brute-force oracle.

    Attributes:
        max_paths: Maximum number of simple paths enumerated per endpoint pair
        time_budget_secs: Wall-clock cap (None means unlimited)
        max_optima: Maximum number of optimal solutions collected by enumeration
    """

    max_paths: int = Field(default=10_000, gt=0, description="Simple-path enumeration cap")
    time_budget_secs: float | None = Field(
        default=None, gt=0, description="Wall-clock budget in seconds (optional)"
    )
    max_optima: int = Field(default=10_000, gt=0, description="Cap on enumerated optima")

    @classmethod
    def from_env(
        cls, max_paths: int = 10_000, environ: dict[str, str] | None = None
    ) -> "OracleLimits":
        """Build limits, taking the time budget from SCSS_TIME_BUDGET_SECS if set."""
        env = os.environ if environ is None else environ
        raw = env.get(TIME_BUDGET_ENV_VAR)
        budget = float(raw) if raw is not None and raw.strip() != "" else None
        return cls(max_paths=max_paths, time_budget_secs=budget)

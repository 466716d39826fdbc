"""Solution verification."""

from pydantic import BaseModel, Field

from src.common.exceptions import WalkError, WeightOverflowError
from src.common.types import Weight
from src.graph.cost import edge_usage, phi_cost_from_usage
from src.graph.instance import Instance, Solution, check_walk


class VerifyReport(BaseModel):
    """Verdict of `verify`.

    Attributes:
        ok: True iff there are no violations
        reported_cost: Cost claimed by the solution
        recomputed_cost: Cost recomputed from the walks (None if the walks are broken)
        violations: Human-readable description of every problem found
    """

    ok: bool
    reported_cost: Weight
    recomputed_cost: Weight | None = None
    violations: list[str] = Field(default_factory=list)


def verify(instance: Instance, solution: Solution) -> VerifyReport:
    """Check walk counts, edge existence, endpoints, and the claimed cost.

    Never raises for a bad solution; every problem becomes a violation entry.

    Example:
        ```python
        report = verify(instance, solution)
        if not report.ok:
            print(report.violations)
        ```
    """
    violations: list[str] = []
    if len(solution.forward) != instance.k1:
        violations.append(
            f"expected {instance.k1} forward walks, found {len(solution.forward)}"
        )
    if len(solution.backward) != instance.k2:
        violations.append(
            f"expected {instance.k2} backward walks, found {len(solution.backward)}"
        )

    walks_intact = True
    sides = (
        ("forward", solution.forward, instance.s, instance.t),
        ("backward", solution.backward, instance.t, instance.s),
    )
    for side, walks, start, end in sides:
        for index, walk in enumerate(walks):
            try:
                check_walk(instance.graph, walk)
            except WalkError as e:
                violations.append(f"{side}[{index}]: {e}")
                walks_intact = False
                continue
            if walk.start != start or walk.end != end:
                violations.append(
                    f"{side}[{index}]: endpoint violation, runs {walk.start}->{walk.end}, "
                    f"expected {start}->{end}"
                )

    recomputed: Weight | None = None
    if walks_intact:
        try:
            recomputed = phi_cost_from_usage(
                instance, edge_usage(solution.forward), edge_usage(solution.backward)
            )
        except WeightOverflowError as e:
            violations.append(str(e))
    if recomputed is not None and recomputed != solution.cost:
        violations.append(f"cost mismatch: reported {solution.cost}, recomputed {recomputed}")

    return VerifyReport(
        ok=not violations,
        reported_cost=solution.cost,
        recomputed_cost=recomputed,
        violations=violations,
    )

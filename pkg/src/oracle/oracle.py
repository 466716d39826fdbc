"""Brute-force exact oracle for small 2-SCSS-(k1,k2) instances.

The backward side is enumerated: every k2-multiset of simple t->s paths. For a fixed
backward choice with usage b(e), the forward side is a minimum-cost flow of value k1
where the first b(e) units on e are free and the rest pay the edge weight, since
max(f, b) = b + max(0, f - b). Simple backward paths suffice because removing a cycle
from a walk never increases the cost when weights are non-negative.
"""

import logging
import time
from collections import Counter
from collections.abc import Sequence
from itertools import combinations_with_replacement

from pydantic import BaseModel, ConfigDict, Field

from src.common.config import OracleLimits
from src.common.exceptions import InfeasibleError, OracleLimitExceeded, TimeBudgetExceeded
from src.common.types import Weight, checked_add, checked_mul
from src.graph.cost import build_solution
from src.graph.digraph import Digraph
from src.graph.instance import Instance, Solution, Walk
from src.oracle.flow import expand_unit_copies, min_cost_flow

logger = logging.getLogger(__name__)


class OracleResult(BaseModel):
    """Optimum found by the oracle together with a witness and enumeration counts."""

    model_config = ConfigDict(frozen=True)

    cost: Weight = Field(..., ge=0)
    solution: Solution
    backward_paths: int = Field(..., ge=0, description="Simple t->s paths enumerated")
    backward_choices: int = Field(..., ge=0, description="Backward multisets evaluated")


class _Deadline:
    def __init__(self, budget: float | None):
        self.budget = budget
        self.expires = time.monotonic() + budget if budget else None

    def check(self, what: str) -> None:
        if self.expires is not None and time.monotonic() > self.expires:
            raise TimeBudgetExceeded(f"Oracle exceeded {self.budget}s while {what}")


def enumerate_simple_paths(graph: Digraph, u: int, v: int, limit: int) -> list[list[int]]:
    """All simple u->v paths as edge-id lists, in lexicographic order.

    Out-edges are tried by (head, weight, edge id), so the listing is deterministic.
    Parallel edges produce distinct paths; self-loops never appear.

    Raises:
        OracleLimitExceeded: If more than `limit` paths exist
    """
    edges = graph.edges
    ordered_out = [
        sorted(
            (edge_id for edge_id in graph.out_edges[w] if edges[edge_id].head != w),
            key=lambda edge_id: (edges[edge_id].head, edges[edge_id].weight, edge_id),
        )
        for w in range(graph.n)
    ]
    paths: list[list[int]] = []
    on_path = [False] * graph.n
    current: list[int] = []

    def extend(w: int) -> None:
        if w == v:
            paths.append(list(current))
            if len(paths) > limit:
                raise OracleLimitExceeded(f"More than {limit} simple {u}->{v} paths", len(paths))
            return
        on_path[w] = True
        for edge_id in ordered_out[w]:
            head = edges[edge_id].head
            if on_path[head]:
                continue
            current.append(edge_id)
            extend(head)
            current.pop()
        on_path[w] = False

    extend(u)
    return paths


def _backward_usage(paths: Sequence[Sequence[int]]) -> Counter[int]:
    usage: Counter[int] = Counter()
    for path in paths:
        usage.update(path)
    return usage


def _decompose(
    graph: Digraph, edge_flow: Counter[int], s: int, t: int, k: int
) -> list[list[int]]:
    """Split an integral s->t flow into k simple paths, dropping any cycles."""
    remaining = Counter(edge_flow)
    paths = []
    for _ in range(k):
        path: list[int] = []
        index_of = {s: 0}
        v = s
        while v != t:
            edge_id = min(e for e in graph.out_edges[v] if remaining[e] > 0)
            remaining[edge_id] -= 1
            head = graph.edges[edge_id].head
            if head in index_of:
                cut = index_of[head]
                for dropped in path[cut:]:
                    del index_of[graph.edges[dropped].head]
                del path[cut:]
            else:
                path.append(edge_id)
                index_of[head] = len(path)
            v = head
        paths.append(path)
    return paths


def oracle_solve(instance: Instance, limits: OracleLimits | None = None) -> OracleResult:
    """Exact optimum with a witness solution.

    Args:
        instance: Any instance small enough to enumerate its simple t->s paths
        limits: Path-count cap and time budget

    Returns:
        OracleResult whose solution is made of simple paths and has the optimal cost

    Raises:
        InfeasibleError: If s and t are not strongly connected
        OracleLimitExceeded: If the path cap is hit
        TimeBudgetExceeded: If the time budget runs out
    """
    limits = limits or OracleLimits()
    deadline = _Deadline(limits.time_budget_secs)
    graph, s, t = instance.graph, instance.s, instance.t
    if t not in graph.reachable_from(s):
        raise InfeasibleError(f"No {s}->{t} path")
    backward_paths = enumerate_simple_paths(graph, t, s, limits.max_paths)
    if not backward_paths:
        raise InfeasibleError(f"No {t}->{s} path")
    logger.debug("Oracle enumerated %d simple backward paths", len(backward_paths))

    best: tuple[Weight, tuple[int, ...], list[list[int]]] | None = None
    choices = 0
    for chosen in combinations_with_replacement(range(len(backward_paths)), instance.k2):
        choices += 1
        if choices % 256 == 0:
            deadline.check("evaluating backward choices")
        usage = _backward_usage([backward_paths[i] for i in chosen])
        backward_cost = 0
        for edge_id, count in usage.items():
            backward_cost = checked_add(
                backward_cost, checked_mul(graph.edges[edge_id].weight, count)
            )
        if best is not None and backward_cost >= best[0]:
            continue
        network = expand_unit_copies(graph, instance.k1, usage)
        flow = min_cost_flow(network, s, t, instance.k1)
        total = checked_add(backward_cost, flow.cost)
        if best is None or total < best[0]:
            forward_paths = _decompose(graph, flow.edge_flow(network), s, t, instance.k1)
            best = (total, chosen, forward_paths)

    assert best is not None
    cost, chosen, forward_paths = best
    solution = build_solution(
        instance,
        [Walk.from_edges(graph, s, path) for path in forward_paths],
        [Walk.from_edges(graph, t, backward_paths[i]) for i in chosen],
    )
    if solution.cost != cost:
        logger.warning("Oracle witness cost %d differs from optimum %d", solution.cost, cost)
    logger.info("Oracle optimum %d after %d backward choices", cost, choices)
    return OracleResult(
        cost=cost,
        solution=solution,
        backward_paths=len(backward_paths),
        backward_choices=choices,
    )


def oracle_opt(instance: Instance, limits: OracleLimits | None = None) -> Weight:
    """Exact optimum cost; see `oracle_solve`."""
    return oracle_solve(instance, limits).cost


def oracle_enumerate_optima(
    instance: Instance, limits: OracleLimits | None = None
) -> list[Solution]:
    """Every optimal solution made of simple paths.

    Forward multisets are enumerated first, then backward multisets, both in
    lexicographic path order. A branch is cut as soon as its partial cost exceeds the
    optimum, since adding walks never lowers the cost.

    Raises:
        OracleLimitExceeded: If a path cap or `limits.max_optima` is exceeded
        TimeBudgetExceeded: If the time budget runs out
    """
    limits = limits or OracleLimits()
    deadline = _Deadline(limits.time_budget_secs)
    opt = oracle_opt(instance, limits)
    graph, s, t = instance.graph, instance.s, instance.t
    forward_paths = enumerate_simple_paths(graph, s, t, limits.max_paths)
    backward_paths = enumerate_simple_paths(graph, t, s, limits.max_paths)
    weights = [edge.weight for edge in graph.edges]
    optima: list[Solution] = []

    def phi(forward: Counter[int], backward: Counter[int]) -> Weight:
        keys = forward.keys() | backward.keys()
        return sum(weights[e] * max(forward[e], backward[e]) for e in keys)

    forward_prefix: list[int] = []
    forward_usage: Counter[int] = Counter()

    def choose_forward(first: int) -> None:
        if len(forward_prefix) == instance.k1:
            choose_backward(0, [], Counter())
            return
        for index in range(first, len(forward_paths)):
            deadline.check("enumerating optima")
            forward_prefix.append(index)
            forward_usage.update(forward_paths[index])
            if phi(forward_usage, Counter()) <= opt:
                choose_forward(index)
            forward_usage.subtract(forward_paths[index])
            forward_prefix.pop()

    def choose_backward(first: int, prefix: list[int], usage: Counter[int]) -> None:
        cost = phi(forward_usage, usage)
        if cost > opt:
            return
        if len(prefix) == instance.k2:
            if cost == opt:
                record(prefix)
            return
        for index in range(first, len(backward_paths)):
            choose_backward(index, prefix + [index], usage + Counter(backward_paths[index]))

    def record(backward_prefix: list[int]) -> None:
        if len(optima) >= limits.max_optima:
            raise OracleLimitExceeded(f"More than {limits.max_optima} optima", len(optima) + 1)
        optima.append(
            build_solution(
                instance,
                [Walk.from_edges(graph, s, forward_paths[i]) for i in forward_prefix],
                [Walk.from_edges(graph, t, backward_paths[j]) for j in backward_prefix],
            )
        )

    choose_forward(0)
    logger.info("Enumerated %d optima of cost %d", len(optima), opt)
    return optima

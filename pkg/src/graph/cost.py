"""Max-multiplicity (phi) cost evaluation."""

from collections import Counter
from collections.abc import Iterable, Sequence

from src.common.exceptions import WalkError
from src.common.types import Weight, checked_add, checked_mul
from src.graph.instance import Instance, Solution, VertexWeightedInstance, Walk, check_walk


def edge_usage(walks: Iterable[Walk]) -> Counter[int]:
    """Count traversals per edge id across walks, with multiplicity.

    A walk that uses an edge twice contributes 2 for that edge.
    """
    usage: Counter[int] = Counter()
    for walk in walks:
        usage.update(walk.edges)
    return usage


def phi_cost_from_usage(
    instance: Instance, forward_usage: Counter[int], backward_usage: Counter[int]
) -> Weight:
    """Sum of weight * max(forward usage, backward usage) over all edges."""
    edges = instance.graph.edges
    total = 0
    for edge_id in forward_usage.keys() | backward_usage.keys():
        phi = max(forward_usage[edge_id], backward_usage[edge_id])
        total = checked_add(total, checked_mul(edges[edge_id].weight, phi))
    return total


def evaluate_phi_cost(
    instance: Instance, forward: Sequence[Walk], backward: Sequence[Walk]
) -> Weight:
    """Evaluate the 2-SCSS objective for concrete walks.

    Args:
        instance: The instance the walks live in
        forward: Exactly k1 walks, each s->t
        backward: Exactly k2 walks, each t->s

    Returns:
        Sum over edges of weight * max(forward traversals, backward traversals)

    Raises:
        WalkError: On a wrong walk count, a broken walk, or an endpoint mismatch
        WeightOverflowError: If the cost leaves the 64-bit range

    Example:
        ```python
        # s->t of weight 5 used by two forward walks, t->s of weight 3
        evaluate_phi_cost(instance, [f, f], [b])  # 2*5 + 3 = 13
        ```
    """
    if len(forward) != instance.k1:
        raise WalkError(f"Expected {instance.k1} forward walks, got {len(forward)}")
    if len(backward) != instance.k2:
        raise WalkError(f"Expected {instance.k2} backward walks, got {len(backward)}")
    for walk in forward:
        check_walk(instance.graph, walk, instance.s, instance.t)
    for walk in backward:
        check_walk(instance.graph, walk, instance.t, instance.s)
    return phi_cost_from_usage(instance, edge_usage(forward), edge_usage(backward))


def build_solution(
    instance: Instance, forward: Sequence[Walk], backward: Sequence[Walk]
) -> Solution:
    """Wrap walks into a Solution whose cost is recomputed from the walks."""
    cost = evaluate_phi_cost(instance, forward, backward)
    return Solution(forward=tuple(forward), backward=tuple(backward), cost=cost)


def evaluate_vertex_phi_cost(
    vwi: VertexWeightedInstance,
    forward: Sequence[Sequence[int]],
    backward: Sequence[Sequence[int]],
) -> Weight:
    """Evaluate the vertex-weighted objective for vertex sequences.

    Terminals never contribute. Visits are counted with multiplicity, matching the
    edge-weighted convention.

    Raises:
        WalkError: On wrong counts, missing edges, or endpoint mismatch
    """
    if len(forward) != vwi.k1 or len(backward) != vwi.k2:
        raise WalkError(
            f"Expected {vwi.k1} forward and {vwi.k2} backward walks, "
            f"got {len(forward)} and {len(backward)}"
        )
    for walks, start, end in ((forward, vwi.s, vwi.t), (backward, vwi.t, vwi.s)):
        for vertices in walks:
            # from_vertices validates that every hop is an edge
            walk = Walk.from_vertices(vwi.graph, vertices)
            check_walk(vwi.graph, walk, start, end)

    forward_visits = _vertex_visits(forward)
    backward_visits = _vertex_visits(backward)
    total = 0
    for v in forward_visits.keys() | backward_visits.keys():
        if v in (vwi.s, vwi.t):
            continue
        phi = max(forward_visits[v], backward_visits[v])
        total = checked_add(total, checked_mul(vwi.vertex_weights[v], phi))
    return total


def _vertex_visits(walks: Iterable[Sequence[int]]) -> Counter[int]:
    visits: Counter[int] = Counter()
    for vertices in walks:
        visits.update(vertices)
    return visits

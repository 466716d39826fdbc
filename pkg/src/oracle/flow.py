"""Minimum-cost flow by successive shortest augmenting paths."""

import heapq
from collections import Counter
from collections.abc import Mapping

from pydantic import BaseModel, Field

from src.common.exceptions import FlowInfeasibleError
from src.common.types import Weight
from src.graph.digraph import Digraph


class FlowNetwork:
    """Residual network with paired arcs.

    Arc 2i is the i-th arc added by `add_arc`; arc 2i+1 is its residual reverse with
    zero capacity and negated cost.
    """

    def __init__(self, n: int):
        self.n = n
        self.heads: list[int] = []
        self.caps: list[int] = []
        self.costs: list[int] = []
        self.adjacency: list[list[int]] = [[] for _ in range(n)]
        # edge id of the source graph per user arc, when the network was expanded
        self.origin: list[int | None] = []

    def add_arc(
        self, tail: int, head: int, capacity: int, cost: int, origin: int | None = None
    ) -> int:
        """Add an arc and its residual twin; returns the user arc index."""
        if capacity < 0 or cost < 0:
            raise ValueError("Arc capacity and cost must be non-negative")
        index = len(self.origin)
        for u, v, cap, c in ((tail, head, capacity, cost), (head, tail, 0, -cost)):
            self.adjacency[u].append(len(self.heads))
            self.heads.append(v)
            self.caps.append(cap)
            self.costs.append(c)
        self.origin.append(origin)
        return index

    @property
    def arc_count(self) -> int:
        return len(self.origin)

    def tail(self, arc: int) -> int:
        return self.heads[arc ^ 1]


class FlowResult(BaseModel):
    """Cost of a minimum-cost flow and the flow on every user arc."""

    value: int = Field(..., ge=0)
    cost: Weight = Field(..., ge=0)
    arc_flow: list[int] = Field(default_factory=list)

    def edge_flow(self, network: FlowNetwork) -> Counter[int]:
        """Aggregate arc flow onto source-graph edge ids (expanded networks only)."""
        flow: Counter[int] = Counter()
        for index, units in enumerate(self.arc_flow):
            origin = network.origin[index]
            if units and origin is not None:
                flow[origin] += units
        return flow


def min_cost_flow(network: FlowNetwork, source: int, sink: int, value: int) -> FlowResult:
    """Send `value` units from source to sink at minimum total cost.

    Each round runs Dijkstra on reduced costs (cost + potential[u] - potential[v]),
    which stay non-negative because all original costs are non-negative and potentials
    are updated with the latest distances. The network's residual capacities are
    consumed by the call.

    Raises:
        FlowInfeasibleError: If the maximum flow is smaller than `value`

    Example:
        ```python
        network = FlowNetwork(2)
        for cost in (0, 4, 4):
            network.add_arc(0, 1, 1, cost)
        min_cost_flow(network, 0, 1, 3).cost  # 8
        ```
    """
    n = network.n
    heads, caps, costs = network.heads, network.caps, network.costs
    potential = [0] * n
    sent = 0
    total = 0
    while sent < value:
        dist: list[int | None] = [None] * n
        via: list[int | None] = [None] * n
        dist[source] = 0
        heap = [(0, source)]
        done = [False] * n
        while heap:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for arc in network.adjacency[u]:
                if caps[arc] <= 0:
                    continue
                v = heads[arc]
                candidate = d + costs[arc] + potential[u] - potential[v]
                if dist[v] is None or candidate < dist[v]:
                    dist[v] = candidate
                    via[v] = arc
                    heapq.heappush(heap, (candidate, v))
        if dist[sink] is None:
            raise FlowInfeasibleError(f"Maximum flow is {sent}, requested {value}")
        for v in range(n):
            if dist[v] is not None:
                potential[v] += dist[v]

        push = value - sent
        v = sink
        while v != source:
            arc = via[v]
            push = min(push, caps[arc])
            v = heads[arc ^ 1]
        v = sink
        while v != source:
            arc = via[v]
            caps[arc] -= push
            caps[arc ^ 1] += push
            total += push * costs[arc]
            v = heads[arc ^ 1]
        sent += push

    arc_flow = [caps[2 * index + 1] for index in range(network.arc_count)]
    return FlowResult(value=sent, cost=total, arc_flow=arc_flow)


def expand_unit_copies(
    graph: Digraph, copies: int, free_units: Mapping[int, int] | None = None
) -> FlowNetwork:
    """Expand every edge into `copies` unit-capacity arcs.

    The first min(free_units[e], copies) copies of edge e cost 0 and the rest cost the
    edge weight. Self-loops are left out.
    """
    free_units = free_units or {}
    network = FlowNetwork(graph.n)
    for edge_id, edge in enumerate(graph.edges):
        if edge.tail == edge.head:
            continue
        free = min(free_units.get(edge_id, 0), copies)
        for copy in range(copies):
            cost = 0 if copy < free else edge.weight
            network.add_arc(edge.tail, edge.head, 1, cost, origin=edge_id)
    return network

"""All-pairs shortest paths with predecessor storage."""

import heapq
import logging

from src.common.types import Weight
from src.graph.digraph import Digraph
from src.graph.instance import Walk

logger = logging.getLogger(__name__)


class ShortestPathTable:
    """Distances and predecessor edges for every ordered vertex pair.

    Unreachable pairs have distance None. One shortest walk per pair is recoverable
    through `path`; predecessor ties are broken toward the lowest tail vertex id, then the
    lighter edge, then the lowest edge id, so extraction is deterministic.

    The table is immutable once built.
    """

    __slots__ = ("_graph", "_dist", "_pred")

    def __init__(
        self,
        graph: Digraph,
        dist: tuple[tuple[Weight | None, ...], ...],
        pred: tuple[tuple[int | None, ...], ...],
    ) -> None:
        self._graph = graph
        self._dist = dist
        self._pred = pred

    @property
    def graph(self) -> Digraph:
        return self._graph

    def dist(self, u: int, v: int) -> Weight | None:
        """Shortest u->v distance, or None if v is unreachable from u."""
        return self._dist[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self._dist[u][v] is not None

    def path(self, u: int, v: int) -> list[int]:
        """Edge ids of the stored shortest u->v walk.

        Raises:
            KeyError: If v is unreachable from u
        """
        if self._dist[u][v] is None:
            raise KeyError(f"Vertex {v} is unreachable from {u}")
        pred = self._pred[u]
        edges = self._graph.edges
        path: list[int] = []
        current = v
        while current != u:
            edge_id = pred[current]
            path.append(edge_id)
            current = edges[edge_id].tail
        path.reverse()
        return path

    def walk(self, u: int, v: int) -> Walk:
        return Walk.from_edges(self._graph, u, self.path(u, v))


def all_pairs_shortest_paths(graph: Digraph) -> ShortestPathTable:
    """Run one label-setting search per source.

    Self-loops never lie on a shortest path and are skipped.

    Args:
        graph: Graph with non-negative weights

    Returns:
        ShortestPathTable covering every ordered pair

    Example:
        ```python
        graph = Digraph(3, [(0, 1, 2), (1, 2, 3)])
        spt = all_pairs_shortest_paths(graph)
        spt.dist(0, 2)  # 5
        spt.path(0, 2)  # [0, 1]
        ```
    """
    dist_rows = []
    pred_rows = []
    for source in range(graph.n):
        dist, pred = _single_source(graph, source)
        dist_rows.append(tuple(dist))
        pred_rows.append(tuple(pred))
    logger.debug("Computed shortest paths for %d sources", graph.n)
    return ShortestPathTable(graph, tuple(dist_rows), tuple(pred_rows))


def _single_source(graph: Digraph, source: int) -> tuple[list[Weight | None], list[int | None]]:
    n = graph.n
    edges = graph.edges
    dist: list[Weight | None] = [None] * n
    pred: list[int | None] = [None] * n
    settled = [False] * n
    dist[source] = 0
    heap: list[tuple[Weight, int]] = [(0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if settled[v]:
            continue
        settled[v] = True
        for edge_id in graph.out_edges[v]:
            edge = edges[edge_id]
            w = edge.head
            if w == v or settled[w]:
                continue
            candidate = d + edge.weight
            current = dist[w]
            if current is None or candidate < current:
                dist[w] = candidate
                pred[w] = edge_id
                heapq.heappush(heap, (candidate, w))
            elif candidate == current and _better_pred(graph, edge_id, pred[w]):
                pred[w] = edge_id
    return dist, pred


def _better_pred(graph: Digraph, edge_id: int, incumbent: int | None) -> bool:
    if incumbent is None:
        return True
    new, old = graph.edges[edge_id], graph.edges[incumbent]
    return (new.tail, new.weight, edge_id) < (old.tail, old.weight, incumbent)

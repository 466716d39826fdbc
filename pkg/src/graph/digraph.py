"""Directed weighted multigraph."""

from collections.abc import Iterable
from typing import NamedTuple

from src.common.exceptions import InvalidInstanceError
from src.common.types import Weight, check_weight


class Edge(NamedTuple):
    """A directed edge; its position in `Digraph.edges` is its edge id."""

    tail: int
    head: int
    weight: Weight


class Digraph:
    """Immutable directed weighted multigraph on vertices 0..n-1.

    Parallel edges and self-loops are permitted. Edge ids are positions in the edge
    list. The in/out adjacency indexes hold edge ids and are built once at
    construction; the graph is never mutated afterwards, so it can be shared freely
    between threads and solver runs.

    Example:
        ```python
        graph = Digraph(2, [(0, 1, 5), (1, 0, 3)])
        graph.out_edges[0]  # (0,)
        graph.edges[0].weight  # 5
        ```
    """

    __slots__ = ("_n", "_edges", "_out", "_in")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()) -> None:
        """Build the graph and its adjacency indexes.

        Args:
            n: Number of vertices
            edges: (tail, head, weight) triples

        Raises:
            InvalidInstanceError: If n is negative or an endpoint is out of range
            ValueError: If a weight is negative
        """
        if n < 0:
            raise InvalidInstanceError(f"Vertex count must be non-negative, got {n}")
        built: list[Edge] = []
        out_lists: list[list[int]] = [[] for _ in range(n)]
        in_lists: list[list[int]] = [[] for _ in range(n)]
        for tail, head, weight in edges:
            if not (0 <= tail < n and 0 <= head < n):
                raise InvalidInstanceError(
                    f"Edge ({tail}, {head}) has an endpoint outside 0..{n - 1}"
                )
            edge_id = len(built)
            built.append(Edge(tail, head, check_weight(weight)))
            out_lists[tail].append(edge_id)
            in_lists[head].append(edge_id)
        self._n = n
        self._edges: tuple[Edge, ...] = tuple(built)
        self._out: tuple[tuple[int, ...], ...] = tuple(tuple(ids) for ids in out_lists)
        self._in: tuple[tuple[int, ...], ...] = tuple(tuple(ids) for ids in in_lists)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self._n

    @property
    def m(self) -> int:
        """Number of edges (parallel edges and self-loops included)."""
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        """Out-edge ids per vertex."""
        return self._out

    @property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        """In-edge ids per vertex."""
        return self._in

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def total_weight(self) -> Weight:
        return sum(edge.weight for edge in self._edges)

    def reversed(self) -> "Digraph":
        """Return the graph with every edge reversed; edge ids are preserved."""
        return Digraph(self._n, ((e.head, e.tail, e.weight) for e in self._edges))

    def scaled(self, factor: int) -> "Digraph":
        """Return the graph with every weight multiplied by a non-negative factor."""
        if factor < 0:
            raise ValueError(f"Scale factor must be non-negative, got {factor}")
        return Digraph(self._n, ((e.tail, e.head, e.weight * factor) for e in self._edges))

    def cheapest_edge(self, tail: int, head: int) -> int | None:
        """Return the id of the lightest tail->head edge (lowest id on ties), or None."""
        best: int | None = None
        for edge_id in self._out[tail]:
            edge = self._edges[edge_id]
            if edge.head != head:
                continue
            if best is None or edge.weight < self._edges[best].weight:
                best = edge_id
        return best

    def reachable_from(self, source: int) -> set[int]:
        """Vertices reachable from `source` (including itself)."""
        return self._search(source, forward=True)

    def reaching(self, target: int) -> set[int]:
        """Vertices that can reach `target` (including itself)."""
        return self._search(target, forward=False)

    def _search(self, root: int, forward: bool) -> set[int]:
        seen = {root}
        stack = [root]
        index = self._out if forward else self._in
        while stack:
            v = stack.pop()
            for edge_id in index[v]:
                edge = self._edges[edge_id]
                w = edge.head if forward else edge.tail
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, m={len(self._edges)})"


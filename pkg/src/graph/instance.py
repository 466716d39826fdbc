"""Instance, walk, and solution models."""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.common.exceptions import WalkError, WeightOverflowError
from src.common.types import MAX_WEIGHT, Weight
from src.graph.digraph import Digraph


class Instance(BaseModel):
    """An edge-weighted 2-SCSS-(k1,k2) instance.

    Asks for k1 s->t paths and k2 t->s paths minimizing the max-multiplicity cost. The
    total edge weight times (k1 + k2) must fit in 64 bits so that no solution cost can
    overflow.

    Attributes:
        graph: The directed weighted multigraph
        s: Source terminal
        t: Sink terminal (must differ from s)
        k1: Number of s->t paths (>= 1)
        k2: Number of t->s paths (>= 1)

    Example:
        ```python
        graph = Digraph(2, [(0, 1, 2), (1, 0, 3)])
        instance = Instance(graph=graph, s=0, t=1, k1=1, k2=1)
        ```
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph: Digraph = Field(..., description="Directed weighted multigraph")
    s: int = Field(..., ge=0, description="Source terminal")
    t: int = Field(..., ge=0, description="Sink terminal")
    k1: int = Field(..., ge=1, description="Number of s->t paths")
    k2: int = Field(..., ge=1, description="Number of t->s paths")

    @model_validator(mode="after")
    def _check_terminals(self) -> "Instance":
        n = self.graph.n
        if self.s >= n or self.t >= n:
            raise ValueError(f"Terminals ({self.s}, {self.t}) must be below n = {n}")
        if self.s == self.t:
            raise ValueError("Terminals s and t must differ")
        if self.graph.total_weight() * (self.k1 + self.k2) > MAX_WEIGHT:
            raise WeightOverflowError(
                "Total edge weight times (k1 + k2) exceeds the 64-bit range"
            )
        return self

    def with_demands(self, k1: int, k2: int) -> "Instance":
        """Return the same graph and terminals with different demands."""
        return Instance(graph=self.graph, s=self.s, t=self.t, k1=k1, k2=k2)


class Walk(BaseModel):
    """A walk as an edge-id sequence together with its implied vertex sequence.

    `vertices` always has exactly one more entry than `edges`; an empty walk is a single
    vertex. Consistency with a concrete graph is checked by `check_walk`.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., min_length=1, description="Visited vertices")
    edges: tuple[int, ...] = Field(default=(), description="Traversed edge ids")

    @model_validator(mode="after")
    def _check_lengths(self) -> "Walk":
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("A walk has exactly one more vertex than edges")
        return self

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, graph: Digraph, start: int, edge_ids: Sequence[int]) -> "Walk":
        """Build a walk from a start vertex and edge ids, validating continuity.

        Raises:
            WalkError: If an edge id is unknown or the edges do not chain
        """
        vertices = [start]
        current = start
        for edge_id in edge_ids:
            if not 0 <= edge_id < graph.m:
                raise WalkError(f"Unknown edge id {edge_id}")
            edge = graph.edges[edge_id]
            if edge.tail != current:
                raise WalkError(
                    f"Broken walk: edge {edge_id} starts at {edge.tail}, expected {current}"
                )
            current = edge.head
            vertices.append(current)
        return cls(vertices=tuple(vertices), edges=tuple(edge_ids))

    @classmethod
    def from_vertices(cls, graph: Digraph, vertices: Sequence[int]) -> "Walk":
        """Build a walk from a vertex sequence using the cheapest edge for each hop.

        Raises:
            WalkError: If two consecutive vertices are not joined by an edge
        """
        if not vertices:
            raise WalkError("A walk needs at least one vertex")
        edge_ids = []
        for tail, head in zip(vertices, vertices[1:]):
            if not (0 <= tail < graph.n and 0 <= head < graph.n):
                raise WalkError(f"Vertex pair ({tail}, {head}) is outside the graph")
            edge_id = graph.cheapest_edge(tail, head)
            if edge_id is None:
                raise WalkError(f"No edge {tail}->{head} in the graph")
            edge_ids.append(edge_id)
        return cls(vertices=tuple(vertices), edges=tuple(edge_ids))


def check_walk(
    graph: Digraph, walk: Walk, start: int | None = None, end: int | None = None
) -> None:
    """Validate a walk against a graph and optional endpoints.

    Raises:
        WalkError: On unknown edges, broken continuity, or endpoint mismatch
    """
    for position, edge_id in enumerate(walk.edges):
        if not 0 <= edge_id < graph.m:
            raise WalkError(f"Unknown edge id {edge_id}")
        edge = graph.edges[edge_id]
        if edge.tail != walk.vertices[position] or edge.head != walk.vertices[position + 1]:
            raise WalkError(
                f"Broken walk at position {position}: edge {edge_id} is "
                f"{edge.tail}->{edge.head}, walk says "
                f"{walk.vertices[position]}->{walk.vertices[position + 1]}"
            )
    if start is not None and walk.start != start:
        raise WalkError(f"Walk starts at {walk.start}, expected {start}")
    if end is not None and walk.end != end:
        raise WalkError(f"Walk ends at {walk.end}, expected {end}")


class Solution(BaseModel):
    """k1 forward walks, k2 backward walks, and their max-multiplicity cost.

    Instances built by the solver and oracle always carry the cost recomputed from their
    own walks; a Solution parsed from a file may carry any claimed cost, which
    `verify` compares against the recomputation.
    """

    model_config = ConfigDict(frozen=True)

    forward: tuple[Walk, ...] = Field(..., description="s->t walks")
    backward: tuple[Walk, ...] = Field(..., description="t->s walks")
    cost: Weight = Field(..., ge=0, description="Max-multiplicity cost")


class VertexWeightedInstance(BaseModel):
    """A vertex-weighted 2-SCSS-(k1,k2) instance.

    Edge weights of `graph` are ignored; only `vertex_weights` count, and the terminals
    never contribute to the cost.

    Attributes:
        graph: Directed multigraph (weights ignored)
        vertex_weights: Weight per vertex id, length n
        s: Source terminal
        t: Sink terminal
        k1: Number of s->t paths
        k2: Number of t->s paths
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph: Digraph
    vertex_weights: tuple[int, ...]
    s: int = Field(..., ge=0)
    t: int = Field(..., ge=0)
    k1: int = Field(..., ge=1)
    k2: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_shape(self) -> "VertexWeightedInstance":
        n = self.graph.n
        if len(self.vertex_weights) != n:
            raise ValueError(f"Expected {n} vertex weights, got {len(self.vertex_weights)}")
        if any(w < 0 for w in self.vertex_weights):
            raise ValueError("Vertex weights must be non-negative")
        if self.s >= n or self.t >= n:
            raise ValueError(f"Terminals ({self.s}, {self.t}) must be below n = {n}")
        if self.s == self.t:
            raise ValueError("Terminals s and t must differ")
        if sum(self.vertex_weights) * (self.k1 + self.k2) > MAX_WEIGHT:
            raise WeightOverflowError(
                "Total vertex weight times (k1 + k2) exceeds the 64-bit range"
            )
        return self


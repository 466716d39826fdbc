"""Weight-model transforms and instance symmetries.

Vertex-weighted and edge-weighted instances are interchangeable: splitting every
non-terminal vertex into an in/out pair moves its weight onto an edge, and subdividing
every edge moves the edge weight onto a new vertex. Both directions keep optimal costs
equal, and `lift_walk_vertex_to_edge` carries individual solutions across the split.
"""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field

from src.common.exceptions import WalkError
from src.graph.digraph import Digraph
from src.graph.instance import Instance, VertexWeightedInstance, Walk


class VertexSplit(BaseModel):
    """Where each original vertex lands after `vertex_to_edge_weighted`.

    Terminals keep a single vertex, so their in- and out-copies coincide. Non-terminal
    v owns the edge `split_edge[v]` from `in_vertex[v]` to `out_vertex[v]`; original
    edge ids are preserved as the first m edge ids of the new graph.
    """

    model_config = ConfigDict(frozen=True)

    in_vertex: tuple[int, ...] = Field(..., description="New id of each vertex's in-copy")
    out_vertex: tuple[int, ...] = Field(..., description="New id of each vertex's out-copy")
    split_edge: tuple[int | None, ...] = Field(
        ..., description="Edge id carrying each vertex's weight (None for terminals)"
    )


def vertex_to_edge_weighted(vwi: VertexWeightedInstance) -> tuple[Instance, VertexSplit]:
    """Split each non-terminal vertex into an (in, out) pair joined by its weight.

    The result has 2(n-2)+2 vertices and m+(n-2) edges. Original edges become
    weight-0 edges from the tail's out-copy to the head's in-copy.

    Returns:
        The edge-weighted instance and the vertex mapping record
    """
    graph = vwi.graph
    terminals = (vwi.s, vwi.t)
    in_vertex: list[int] = []
    out_vertex: list[int] = []
    next_id = 0
    for v in range(graph.n):
        in_vertex.append(next_id)
        if v in terminals:
            out_vertex.append(next_id)
            next_id += 1
        else:
            out_vertex.append(next_id + 1)
            next_id += 2

    edges = [(out_vertex[e.tail], in_vertex[e.head], 0) for e in graph.edges]
    split_edge: list[int | None] = []
    for v in range(graph.n):
        if v in terminals:
            split_edge.append(None)
            continue
        split_edge.append(len(edges))
        edges.append((in_vertex[v], out_vertex[v], vwi.vertex_weights[v]))

    instance = Instance(
        graph=Digraph(next_id, edges),
        s=in_vertex[vwi.s],
        t=in_vertex[vwi.t],
        k1=vwi.k1,
        k2=vwi.k2,
    )
    split = VertexSplit(
        in_vertex=tuple(in_vertex), out_vertex=tuple(out_vertex), split_edge=tuple(split_edge)
    )
    return instance, split


def lift_walk_vertex_to_edge(
    vwi: VertexWeightedInstance,
    instance: Instance,
    split: VertexSplit,
    vertices: Sequence[int],
) -> Walk:
    """Map a vertex sequence of the vertex-weighted graph onto the split graph.

    Every visit of a non-terminal traverses its split edge once, so the lifted walks
    have the same cost as the original vertex sequences.

    Raises:
        WalkError: If two consecutive vertices are not joined by an edge
    """
    if not vertices:
        raise WalkError("A walk needs at least one vertex")
    edge_ids: list[int] = []
    for position, v in enumerate(vertices):
        if split.split_edge[v] is not None:
            edge_ids.append(split.split_edge[v])
        if position + 1 < len(vertices):
            original = vwi.graph.cheapest_edge(v, vertices[position + 1])
            if original is None:
                raise WalkError(f"No edge {v}->{vertices[position + 1]} in the graph")
            edge_ids.append(original)
    start = split.in_vertex[vertices[0]]
    walk = Walk.from_edges(instance.graph, start, edge_ids)
    if walk.end != split.out_vertex[vertices[-1]]:
        raise WalkError("Lifted walk does not end at the last vertex's out-copy")
    return walk


def edge_to_vertex_weighted(instance: Instance) -> VertexWeightedInstance:
    """Subdivide every edge with a new vertex carrying the edge weight.

    Original vertices keep their ids and weigh 0; the vertex for edge e is n+e. The
    result has n+m vertices and 2m edges.
    """
    graph = instance.graph
    n = graph.n
    edges: list[tuple[int, int, int]] = []
    for edge_id, edge in enumerate(graph.edges):
        middle = n + edge_id
        edges.append((edge.tail, middle, 0))
        edges.append((middle, edge.head, 0))
    weights = (0,) * n + tuple(edge.weight for edge in graph.edges)
    return VertexWeightedInstance(
        graph=Digraph(n + graph.m, edges),
        vertex_weights=weights,
        s=instance.s,
        t=instance.t,
        k1=instance.k1,
        k2=instance.k2,
    )


def reverse_instance(instance: Instance) -> Instance:
    """Reverse every edge and swap (s, k1) with (t, k2).

    Forward walks of the result are reversed backward walks of the input and vice versa,
    so both instances share the same optimum.
    """
    return Instance(
        graph=instance.graph.reversed(),
        s=instance.t,
        t=instance.s,
        k1=instance.k2,
        k2=instance.k1,
    )


def scale_instance(instance: Instance, factor: int) -> Instance:
    """Multiply every edge weight by a non-negative integer factor."""
    return Instance(
        graph=instance.graph.scaled(factor),
        s=instance.s,
        t=instance.t,
        k1=instance.k1,
        k2=instance.k2,
    )

"""Graph core: multigraph, instances, cost evaluation, transforms, shortest paths, I/O."""

from src.graph.cost import (
    build_solution,
    edge_usage,
    evaluate_phi_cost,
    evaluate_vertex_phi_cost,
)
from src.graph.digraph import Digraph, Edge
from src.graph.generators import random_instance, random_vertex_weighted
from src.graph.instance import Instance, Solution, VertexWeightedInstance, Walk, check_walk
from src.graph.io import (
    parse_instance,
    parse_solution,
    parse_vertex_weighted,
    serialize_instance,
    serialize_solution,
    serialize_vertex_weighted,
)
from src.graph.shortest_paths import ShortestPathTable, all_pairs_shortest_paths
from src.graph.transforms import (
    VertexSplit,
    edge_to_vertex_weighted,
    lift_walk_vertex_to_edge,
    reverse_instance,
    scale_instance,
    vertex_to_edge_weighted,
)

__all__ = [
    "Digraph",
    "Edge",
    "Instance",
    "Walk",
    "Solution",
    "VertexWeightedInstance",
    "check_walk",
    "evaluate_phi_cost",
    "evaluate_vertex_phi_cost",
    "edge_usage",
    "build_solution",
    "ShortestPathTable",
    "all_pairs_shortest_paths",
    "VertexSplit",
    "vertex_to_edge_weighted",
    "edge_to_vertex_weighted",
    "lift_walk_vertex_to_edge",
    "reverse_instance",
    "scale_instance",
    "parse_instance",
    "serialize_instance",
    "parse_vertex_weighted",
    "serialize_vertex_weighted",
    "parse_solution",
    "serialize_solution",
    "random_instance",
    "random_vertex_weighted",
]

"""Tests for weight-model transforms and instance symmetries."""

import pytest

from src.common.exceptions import WalkError
from src.graph.cost import evaluate_phi_cost, evaluate_vertex_phi_cost
from src.graph.digraph import Digraph
from src.graph.generators import random_instance, random_vertex_weighted
from src.graph.instance import Instance, VertexWeightedInstance
from src.graph.transforms import (
    edge_to_vertex_weighted,
    lift_walk_vertex_to_edge,
    reverse_instance,
    scale_instance,
    vertex_to_edge_weighted,
)
from src.oracle.oracle import oracle_opt


@pytest.fixture
def single_vertex() -> VertexWeightedInstance:
    """s=0 -> v=2 -> t=1 with a free return edge; v weighs 7."""
    graph = Digraph(3, [(0, 2, 0), (2, 1, 0), (1, 0, 0)])
    return VertexWeightedInstance(graph=graph, vertex_weights=(0, 0, 7), s=0, t=1, k1=1, k2=1)


class TestVertexToEdge:
    """Test suite for splitting vertices."""

    def test_counts(self):
        """Test n' = 2(n-2)+2 and m' = m+(n-2)."""
        vwi = random_vertex_weighted(6, 11, 5, 1, 1, seed=3)
        instance, split = vertex_to_edge_weighted(vwi)

        assert instance.graph.n == 2 * (6 - 2) + 2
        assert instance.graph.m == 11 + (6 - 2)
        assert split.split_edge[vwi.s] is None
        assert split.split_edge[vwi.t] is None

    def test_split_edge_carries_weight(self, single_vertex):
        """Test that v's weight lands on its (in, out) edge."""
        instance, split = vertex_to_edge_weighted(single_vertex)
        edge = instance.graph.edges[split.split_edge[2]]

        assert (edge.tail, edge.head, edge.weight) == (split.in_vertex[2], split.out_vertex[2], 7)
        assert all(e.weight == 0 for e in instance.graph.edges[: single_vertex.graph.m])

    def test_single_vertex_optimum(self, single_vertex):
        """Test that the transformed optimum pays v once."""
        instance, _ = vertex_to_edge_weighted(single_vertex)
        assert oracle_opt(instance) == 7
        assert oracle_opt(instance.with_demands(2, 1)) == 14

    def test_lift_preserves_cost(self, single_vertex):
        """Test that lifted walks cost what the vertex sequences cost."""
        instance, split = vertex_to_edge_weighted(single_vertex)
        forward = lift_walk_vertex_to_edge(single_vertex, instance, split, [0, 2, 1])
        backward = lift_walk_vertex_to_edge(single_vertex, instance, split, [1, 0])

        assert evaluate_phi_cost(instance, [forward], [backward]) == evaluate_vertex_phi_cost(
            single_vertex, [[0, 2, 1]], [[1, 0]]
        )

    def test_lift_missing_edge(self, single_vertex):
        """Test that lifting a non-walk raises."""
        instance, split = vertex_to_edge_weighted(single_vertex)
        with pytest.raises(WalkError):
            lift_walk_vertex_to_edge(single_vertex, instance, split, [0, 1])

    @pytest.mark.parametrize("seed", range(8))
    def test_oracle_optimum_preserved(self, seed):
        """Test that the vertex-weighted optimum survives the split.

        The vertex-weighted optimum is measured by subdividing back: the edge
        instance obtained from the round trip must have the same optimum.
        """
        vwi = random_vertex_weighted(6, 10, 9, 2, 1, seed, strongly_connected=True)
        instance, _ = vertex_to_edge_weighted(vwi)
        round_trip, _ = vertex_to_edge_weighted(edge_to_vertex_weighted(instance))

        assert oracle_opt(round_trip) == oracle_opt(instance)


class TestEdgeToVertex:
    """Test suite for subdividing edges."""

    def test_single_edge(self):
        """Test that edge (s, t) of weight 4 becomes a weight-4 middle vertex."""
        instance = Instance(graph=Digraph(2, [(0, 1, 4), (1, 0, 0)]), s=0, t=1, k1=1, k2=1)
        vwi = edge_to_vertex_weighted(instance)

        assert vwi.vertex_weights == (0, 0, 4, 0)
        assert vwi.graph.edges[0][:2] == (0, 2)
        assert vwi.graph.edges[1][:2] == (2, 1)

    def test_counts(self):
        """Test n' = n+m and m' = 2m."""
        instance = random_instance(5, 9, 4, 1, 1, seed=1)
        vwi = edge_to_vertex_weighted(instance)
        assert vwi.graph.n == 5 + 9
        assert vwi.graph.m == 2 * 9

    @pytest.mark.parametrize("seed", range(8))
    def test_round_trip_preserves_optimum(self, seed):
        """Test edge -> vertex -> edge keeps the oracle optimum."""
        instance = random_instance(6, 10, 9, 1, 1, seed, strongly_connected=True)
        round_trip, _ = vertex_to_edge_weighted(edge_to_vertex_weighted(instance))
        assert oracle_opt(round_trip) == oracle_opt(instance)


class TestSymmetries:
    """Test suite for reversal and scaling."""

    def test_reverse_swaps_terminals_and_demands(self):
        """Test that reversal swaps (s, k1) with (t, k2)."""
        instance = random_instance(4, 6, 3, 3, 1, seed=2)
        reversed_instance = reverse_instance(instance)

        assert (reversed_instance.s, reversed_instance.t) == (instance.t, instance.s)
        assert (reversed_instance.k1, reversed_instance.k2) == (1, 3)
        assert reverse_instance(reversed_instance) == instance

    def test_scale(self):
        """Test that scaling multiplies every weight."""
        instance = random_instance(4, 6, 3, 1, 1, seed=2)
        scaled = scale_instance(instance, 5)
        assert [e.weight for e in scaled.graph.edges] == [
            5 * e.weight for e in instance.graph.edges
        ]

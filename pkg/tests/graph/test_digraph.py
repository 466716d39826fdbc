"""Tests for the Digraph multigraph."""

import pytest

from src.common.exceptions import InvalidInstanceError
from src.graph.digraph import Digraph, Edge


class TestDigraphConstruction:
    """Test suite for building graphs and their indexes."""

    def test_adjacency_indexes(self):
        """Test that in/out indexes list edge ids consistently with the edge list."""
        graph = Digraph(3, [(0, 1, 5), (1, 2, 3), (0, 2, 1)])

        assert graph.n == 3
        assert graph.m == 3
        assert graph.out_edges[0] == (0, 2)
        assert graph.in_edges[2] == (1, 2)
        assert graph.edges[1] == Edge(1, 2, 3)
        for edge_id, edge in enumerate(graph.edges):
            assert edge_id in graph.out_edges[edge.tail]
            assert edge_id in graph.in_edges[edge.head]

    def test_parallel_edges_and_self_loops_allowed(self):
        """Test that multigraph features are accepted."""
        graph = Digraph(2, [(0, 1, 1), (0, 1, 2), (1, 1, 0)])

        assert graph.m == 3
        assert graph.out_degree(0) == 2
        assert graph.in_degree(1) == 3

    def test_dangling_endpoint_rejected(self):
        """Test that an endpoint outside 0..n-1 raises."""
        with pytest.raises(InvalidInstanceError, match="outside"):
            Digraph(2, [(0, 2, 1)])

    def test_negative_weight_rejected(self):
        """Test that negative weights raise ValueError."""
        with pytest.raises(ValueError):
            Digraph(2, [(0, 1, -1)])

    def test_negative_vertex_count_rejected(self):
        """Test that n < 0 raises."""
        with pytest.raises(InvalidInstanceError):
            Digraph(-1)


class TestDigraphQueries:
    """Test suite for derived graphs and searches."""

    def test_cheapest_edge_prefers_light_then_low_id(self):
        """Test the parallel-edge tie-break."""
        graph = Digraph(2, [(0, 1, 5), (0, 1, 3), (0, 1, 3)])

        assert graph.cheapest_edge(0, 1) == 1
        assert graph.cheapest_edge(1, 0) is None

    def test_reachability(self):
        """Test forward and backward reachability."""
        graph = Digraph(4, [(0, 1, 1), (1, 2, 1), (3, 0, 1)])

        assert graph.reachable_from(0) == {0, 1, 2}
        assert graph.reaching(0) == {0, 3}

    def test_reversed_keeps_edge_ids(self):
        """Test that reversing swaps endpoints in place."""
        graph = Digraph(3, [(0, 1, 4), (1, 2, 6)])
        reversed_graph = graph.reversed()

        assert reversed_graph.edges[0] == Edge(1, 0, 4)
        assert reversed_graph.edges[1] == Edge(2, 1, 6)
        assert reversed_graph.reversed() == graph

    def test_scaled(self):
        """Test weight scaling and the negative-factor guard."""
        graph = Digraph(2, [(0, 1, 4), (1, 0, 0)])

        assert [e.weight for e in graph.scaled(3).edges] == [12, 0]
        with pytest.raises(ValueError):
            graph.scaled(-1)

    def test_equality_and_hash(self):
        """Test value semantics."""
        a = Digraph(2, [(0, 1, 1)])
        b = Digraph(2, [(0, 1, 1)])

        assert a == b
        assert hash(a) == hash(b)
        assert a != Digraph(2, [(0, 1, 2)])

    def test_total_weight(self):
        """Test the total weight accessor."""
        graph = Digraph(2, [(0, 1, 4), (1, 0, 6)])

        assert graph.total_weight() == 10

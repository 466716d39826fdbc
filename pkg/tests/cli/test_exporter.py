"""Tests for DOT and certificate export."""

import json
from pathlib import Path

from src.cli.exporter import (
    CertificateFile,
    format_certificate,
    format_dot,
    get_default_certificate_filename,
)
from src.graph.digraph import Digraph
from src.graph.instance import Instance, Solution, Walk
from src.hardness.gadget import gridtiling_to_scss
from src.hardness.gridtiling import UndirectedGraph, clique_to_gridtiling


class TestFormatDot:
    """Test suite for format_dot."""

    def test_plain_instance(self, two_cycle):
        """Test vertices, terminals, and weighted edges."""
        dot = format_dot(two_cycle)

        assert dot.startswith("digraph scss {\n  rankdir=LR;\n")
        assert '  0 [label="0", shape=doublecircle];' in dot
        assert '  0 -> 1 [label="2"];' in dot
        assert dot.endswith("}\n")

    def test_labels(self, two_cycle):
        """Test custom vertex labels."""
        dot = format_dot(two_cycle, labels={0: "s", 1: "t"})
        assert 'label="s"' in dot

    def test_solution_colors(self):
        """Test forward, backward, and shared edge colors."""
        graph = Digraph(3, [(0, 2, 1), (2, 1, 1), (1, 2, 1), (2, 0, 1), (0, 1, 1)])
        instance = Instance(graph=graph, s=0, t=1, k1=2, k2=1)
        forward = (Walk.from_vertices(graph, [0, 2, 1]), Walk.from_vertices(graph, [0, 1]))
        backward = (Walk.from_vertices(graph, [1, 2, 0]),)
        dot = format_dot(instance, Solution(forward=forward, backward=backward, cost=5))

        assert '  0 -> 2 [label="1", color=blue, penwidth=2];' in dot
        assert '  1 -> 2 [label="1", color=red, penwidth=2];' in dot
        assert '  0 -> 1 [label="1", color=blue, penwidth=2];' in dot

    def test_shared_edge(self):
        """Test that an edge in both directions of use is purple."""
        graph = Digraph(3, [(0, 2, 1), (2, 1, 1), (1, 0, 1)])
        instance = Instance(graph=graph, s=0, t=1, k1=1, k2=1)
        walk = Walk.from_vertices(graph, [0, 2, 1, 0, 2, 1])
        back = Walk.from_vertices(graph, [1, 0, 2, 1, 0])
        dot = format_dot(instance, Solution(forward=(walk,), backward=(back,), cost=0))
        assert '  0 -> 2 [label="1", color=purple, penwidth=3];' in dot


class TestCertificate:
    """Test suite for the hardness certificate."""

    def test_certificate_fields(self):
        """Test that the certificate carries beta and one alpha-weight row per path."""
        generated = gridtiling_to_scss(clique_to_gridtiling(UndirectedGraph.complete(2), 2))
        data = json.loads(format_certificate(generated))
        certificate = CertificateFile.model_validate(data)

        assert certificate.beta == 1186189
        assert certificate.alpha == 35749
        assert certificate.demands == (3, 1)
        assert len(certificate.canonical_paths) == 12
        assert {entry.weight for entry in certificate.canonical_paths} == {35749}

    def test_default_filename(self):
        """Test the sidecar naming."""
        path = get_default_certificate_filename(Path("out/grid.scss"))
        assert path == Path("out/grid.scss.cert.json")

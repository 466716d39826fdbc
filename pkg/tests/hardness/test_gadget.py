"""Tests for the Grid Tiling* to 2-SCSS-(2k-1, 1) reduction."""

import re

import pytest

from src.common.exceptions import GridTilingError
from src.hardness.gadget import (
    MAX_N_EFF,
    GadgetParams,
    Orientation,
    ShortcutKind,
    build_yes_solution,
    certify,
    gridtiling_to_scss,
)
from src.hardness.gridtiling import (
    GridTilingInstance,
    UndirectedGraph,
    clique_to_gridtiling,
    gridtiling_bruteforce,
    singleton_mismatch,
)
from src.solver.solver import solve
from src.solver.verify import verify

_GRID = re.compile(r"g\((\d+),(\d+),(\d+),(\d+)\)")


@pytest.fixture(scope="module")
def tiling() -> GridTilingInstance:
    """K_2 with k = 2: one edge, solved by delta = (1, 2)."""
    return clique_to_gridtiling(UndirectedGraph.complete(2), 2)


@pytest.fixture(scope="module")
def generated(tiling):
    return gridtiling_to_scss(tiling)


def _coords(label: str) -> tuple[int, ...] | None:
    match = _GRID.fullmatch(label)
    return tuple(int(group) for group in match.groups()) if match else None


class TestGadgetParams:
    """Test suite for the derived weights."""

    def test_small_dimensions(self):
        """Test the constants for k = 2, n_eff = 3."""
        params = GadgetParams.from_dimensions(2, 3)

        assert params.delta == 5103
        assert params.connector == 1043199
        assert params.alpha == 35749
        assert params.beta == 1186189

    def test_blue_edges_sum_to_delta_multiple(self):
        """Test that the two blue edges of every track sum to delta (n k + 1)."""
        params = GadgetParams.from_dimensions(3, 4)
        for index in range(1, 4):
            for track in range(1, 5):
                total = params.first_blue(index, track) + params.last_blue(index, track)
                assert total == params.delta * (4 * 3 + 1)

    def test_n_eff_cap(self):
        """Test that n_eff above the cap is rejected."""
        with pytest.raises(GridTilingError, match="exceeds"):
            GadgetParams.from_dimensions(2, MAX_N_EFF + 1)

    def test_overflow(self):
        """Test that a huge k overflows into GridTilingError."""
        with pytest.raises(GridTilingError, match="overflow"):
            GadgetParams.from_dimensions(10**9, MAX_N_EFF)


class TestGridTilingToScss:
    """Test suite for the instance generator."""

    def test_shape(self, generated):
        """Test demands, vertex count, and beta for K_2."""
        instance, beta, layout = generated

        assert (instance.k1, instance.k2) == (3, 1)
        assert instance.graph.n == 80
        assert beta == 1186189
        assert layout.params.n_eff == 3
        assert len(layout.labels) == instance.graph.n
        assert layout.vertex("s") == instance.s
        assert layout.vertex("t") == instance.t

    def test_canonical_paths_weigh_alpha(self, generated):
        """Test that every canonical path is a chain of edges weighing alpha."""
        instance, _, layout = generated
        edges = instance.graph.edges

        assert len(layout.canonical_paths) == 2 * 2 * 3
        for path in layout.canonical_paths:
            assert len(path.vertices) == len(path.edges) + 1
            for position, edge_id in enumerate(path.edges):
                assert edges[edge_id].tail == path.vertices[position]
                assert edges[edge_id].head == path.vertices[position + 1]
            assert sum(edges[e].weight for e in path.edges) == layout.params.alpha

    def test_shortcuts(self, generated):
        """Test shortcut kinds, positions, and weights."""
        instance, _, layout = generated
        edges = instance.graph.edges

        assert len(layout.shortcuts) == 4 * 2
        for shortcut in layout.shortcuts:
            i, j = shortcut.gadget
            x, y = shortcut.cell
            assert x > 1 and y > 1
            expected = ShortcutKind.GREEN if i == j else ShortcutKind.ORANGE
            assert shortcut.kind is expected
            assert edges[shortcut.u_to_q].weight == (2 if i == j else 3)
            assert edges[shortcut.p_to_q].weight + edges[shortcut.q_to_r].weight == 4

    def test_grid_edges_point_right_or_down(self, generated):
        """Test that no grid edge runs left or up."""
        instance, _, layout = generated
        for edge in instance.graph.edges:
            tail = _coords(layout.labels[edge.tail])
            head = _coords(layout.labels[edge.head])
            if tail is None or head is None:
                continue
            ti, tj, tx, ty = tail
            hi, hj, hx, hy = head
            assert hi >= ti and hj >= tj
            if (hi, hj) == (ti, tj):
                assert (hx - tx, hy - ty) in ((0, 1), (1, 0))

    def test_canonical_path_lookup(self, generated):
        """Test looking up a vertical path by column and track."""
        _, _, layout = generated
        path = layout.canonical_path(Orientation.VERTICAL, 2, 3)

        assert layout.labels[path.vertices[0]] == "c2"
        assert layout.labels[path.vertices[-1]] == "d2"

    def test_rejects_non_star(self):
        """Test that only star instances are reduced."""
        plain = GridTilingInstance(k=1, n=1, cells=((frozenset({(1, 1)}),),), star=False)
        with pytest.raises(GridTilingError, match="star"):
            gridtiling_to_scss(plain)

    def test_rejects_large_n(self):
        """Test that n + 1 above the cap is rejected."""
        tiling = clique_to_gridtiling(UndirectedGraph.complete(MAX_N_EFF), 1)
        with pytest.raises(GridTilingError):
            gridtiling_to_scss(tiling)


class TestYesSolution:
    """Test suite for the solution built from a tiling solution."""

    def test_costs_beta(self, tiling, generated):
        """Test that the assembled solution verifies at cost beta."""
        delta = gridtiling_bruteforce(tiling)
        solution = build_yes_solution(generated, delta)

        assert delta == (1, 2)
        assert solution.cost == generated.beta
        assert verify(generated.instance, solution).ok

    def test_bad_delta(self, generated):
        """Test that a delta missing a shortcut is rejected."""
        with pytest.raises(GridTilingError, match="No shortcut"):
            build_yes_solution(generated, (1, 1))

    def test_wrong_length(self, generated):
        """Test that delta needs k entries."""
        with pytest.raises(GridTilingError, match="Expected 2"):
            build_yes_solution(generated, (1,))


class TestCertify:
    """Test suite for certify."""

    def test_consistent_yes(self, tiling, generated):
        """Test that cost beta on a solvable tiling is consistent."""
        verdict = certify(generated, generated.beta, tiling)

        assert verdict.within_beta
        assert verdict.tiling_solvable
        assert verdict.consistent

    def test_inconsistent(self, tiling, generated):
        """Test that a cost above beta on a solvable tiling is flagged."""
        verdict = certify(generated, generated.beta + 1, tiling)
        assert not verdict.within_beta
        assert verdict.consistent is False

    def test_without_tiling(self, generated):
        """Test that only the beta comparison runs without a tiling."""
        verdict = certify(generated, 0)
        assert verdict.within_beta
        assert verdict.tiling_solvable is None

    def test_tampered_beta(self, generated):
        """Test that a stored beta off the formula raises."""
        with pytest.raises(GridTilingError, match="differs"):
            certify(generated._replace(beta=generated.beta - 1), 0)


@pytest.mark.slow
class TestEndToEnd:
    """Solve generated instances exactly; minutes of CPU each."""

    def test_yes_instance_optimum_is_beta(self, generated):
        """Test that the optimum equals beta when the tiling is solvable."""
        assert solve(generated.instance).cost == generated.beta

    def test_no_instance_exceeds_beta(self, tiling):
        """Test that the optimum exceeds beta when the tiling is unsolvable."""
        mismatch = singleton_mismatch(tiling)
        no_instance = gridtiling_to_scss(mismatch)
        cost = solve(no_instance.instance).cost

        assert cost > no_instance.beta
        assert certify(no_instance, cost, mismatch).consistent

"""Grid Tiling* instances, the Clique reduction, and brute force.

Indices are 1-based throughout, matching the usual statement of the problem: rows and
columns of the k x k grid are 1..k and every cell holds pairs from [n] x [n].
"""

import itertools
import logging
import random
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.common.exceptions import GridTilingError, InstanceFormatError, OracleLimitExceeded

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


class UndirectedGraph(BaseModel):
    """Simple undirected graph on vertices 1..n, edges stored as (low, high) pairs."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    edges: frozenset[Pair] = Field(default=frozenset())

    @model_validator(mode="after")
    def _check_edges(self) -> "UndirectedGraph":
        for a, b in self.edges:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"Edge ({a}, {b}) must satisfy 1 <= a < b <= {self.n}")
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs: list[Pair]) -> "UndirectedGraph":
        """Build from arbitrary (u, v) pairs; orientation and duplicates are ignored."""
        return cls(n=n, edges=frozenset((min(a, b), max(a, b)) for a, b in pairs))

    @classmethod
    def complete(cls, n: int) -> "UndirectedGraph":
        return cls(n=n, edges=frozenset(itertools.combinations(range(1, n + 1), 2)))

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges


class GridTilingInstance(BaseModel):
    """A Grid Tiling instance with k x k cells of allowed pairs.

    Attributes:
        k: Grid dimension
        n: Value range of every coordinate
        cells: cells[i-1][j-1] is S_{i,j}
        star: Whether every diagonal cell is exactly {(l, l) : l in [n]}
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    cells: tuple[tuple[frozenset[Pair], ...], ...]
    star: bool = True

    @model_validator(mode="after")
    def _check_cells(self) -> "GridTilingInstance":
        if len(self.cells) != self.k or any(len(row) != self.k for row in self.cells):
            raise ValueError(f"Expected a {self.k} x {self.k} grid of cells")
        for i, j in itertools.product(range(1, self.k + 1), repeat=2):
            cell = self.cell(i, j)
            if not cell:
                raise ValueError(f"Cell S_{i},{j} is empty")
            if any(not (1 <= x <= self.n and 1 <= y <= self.n) for x, y in cell):
                raise ValueError(f"Cell S_{i},{j} has a pair outside [{self.n}] x [{self.n}]")
        if self.star:
            diagonal = frozenset((x, x) for x in range(1, self.n + 1))
            for i in range(1, self.k + 1):
                if self.cell(i, i) != diagonal:
                    raise ValueError(f"Diagonal cell S_{i},{i} is not {{(l, l)}}")
        return self

    def cell(self, i: int, j: int) -> frozenset[Pair]:
        return self.cells[i - 1][j - 1]

    def is_solution(self, delta: tuple[int, ...]) -> bool:
        """True iff (delta_i, delta_j) lies in S_{i,j} for every cell."""
        return all(
            (delta[i - 1], delta[j - 1]) in self.cell(i, j)
            for i, j in itertools.product(range(1, self.k + 1), repeat=2)
        )

    def with_cell(self, i: int, j: int, pairs: frozenset[Pair]) -> "GridTilingInstance":
        rows = [list(row) for row in self.cells]
        rows[i - 1][j - 1] = frozenset(pairs)
        return GridTilingInstance(
            k=self.k, n=self.n, cells=tuple(tuple(row) for row in rows), star=self.star
        )


def _star_cells(
    k: int, n: int, off_diagonal: Callable[[int, int], frozenset[Pair]]
) -> tuple[tuple[frozenset[Pair], ...], ...]:
    diagonal = frozenset((x, x) for x in range(1, n + 1))
    return tuple(
        tuple(diagonal if i == j else off_diagonal(i, j) for j in range(1, k + 1))
        for i in range(1, k + 1)
    )


def clique_to_gridtiling(graph: UndirectedGraph, k: int) -> GridTilingInstance:
    """Reduce k-Clique to Grid Tiling*.

    Diagonal cells are {(l, l)}; every off-diagonal cell holds both orientations of every
    edge. The result has a solution iff the graph has a k-clique.

    Raises:
        GridTilingError: If k >= 2 and the graph has no edges
    """
    if k >= 2 and not graph.edges:
        raise GridTilingError("Off-diagonal cells would be empty: the graph has no edges")
    pairs = frozenset(graph.edges | {(b, a) for a, b in graph.edges})
    return GridTilingInstance(
        k=k, n=graph.n, cells=_star_cells(k, graph.n, lambda i, j: pairs), star=True
    )


def gridtiling_bruteforce(
    instance: GridTilingInstance, max_assignments: int = 1_000_000
) -> tuple[int, ...] | None:
    """Try every delta in [n]^k in lexicographic order.

    Returns:
        The first delta with (delta_i, delta_j) in S_{i,j} for all cells, or None

    Raises:
        OracleLimitExceeded: If n^k exceeds `max_assignments`
    """
    if not instance.star:
        raise GridTilingError("Brute force expects a Grid Tiling* instance")
    total = instance.n**instance.k
    if total > max_assignments:
        raise OracleLimitExceeded(
            f"{instance.n}^{instance.k} assignments exceed the budget of {max_assignments}",
            total,
        )
    for delta in itertools.product(range(1, instance.n + 1), repeat=instance.k):
        if instance.is_solution(delta):
            logger.debug("Grid tiling solved by delta=%s", delta)
            return delta
    logger.debug("No grid tiling solution among %d assignments", total)
    return None


def random_gridtiling(k: int, n: int, density: float, seed: int) -> GridTilingInstance:
    """Random Grid Tiling* instance.

    Each off-diagonal pair is kept with probability `density`; a cell that ends up empty
    receives one uniformly drawn pair.
    """
    if not 0.0 <= density <= 1.0:
        raise GridTilingError(f"Density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    drawn: dict[Pair, frozenset[Pair]] = {}
    for i, j in itertools.product(range(1, k + 1), repeat=2):
        if i == j:
            continue
        cell = {
            pair
            for pair in itertools.product(range(1, n + 1), repeat=2)
            if rng.random() < density
        }
        if not cell:
            cell.add((rng.randint(1, n), rng.randint(1, n)))
        drawn[(i, j)] = frozenset(cell)
    return GridTilingInstance(
        k=k, n=n, cells=_star_cells(k, n, lambda i, j: drawn[(i, j)]), star=True
    )


def singleton_mismatch(
    instance: GridTilingInstance, i: int = 1, j: int = 2
) -> GridTilingInstance:
    """Make S_{i,j} = S_{j,i} = {(1, 2)}, which no assignment can satisfy.

    A solution would need (delta_i, delta_j) = (1, 2) and (delta_j, delta_i) = (1, 2).
    """
    if i == j or instance.n < 2:
        raise GridTilingError("Need two distinct cells and n >= 2 to build a mismatch")
    pair = frozenset({(1, 2)})
    return instance.with_cell(i, j, pair).with_cell(j, i, pair)


def parse_clique_graph(text: str) -> UndirectedGraph:
    """Parse `graph <n> <m>` followed by m lines `e <u> <v>` with 1-based ids.

    Raises:
        InstanceFormatError: On malformed lines, out-of-range ids, self-loops, or a
            wrong edge count
    """
    header: tuple[int, int] | None = None
    pairs: list[Pair] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(token) for token in tokens[1:]]
        except ValueError:
            raise InstanceFormatError(f"Non-integer field in {line!r}", line_no) from None
        if header is None:
            if tokens[0] != "graph" or len(values) != 2 or values[0] < 1:
                raise InstanceFormatError("Malformed header, expected 'graph n m'", line_no)
            header = (values[0], values[1])
            continue
        if tokens[0] != "e" or len(values) != 2:
            raise InstanceFormatError("Expected 'e <u> <v>'", line_no)
        a, b = values
        if not (1 <= a <= header[0] and 1 <= b <= header[0]) or a == b:
            raise InstanceFormatError(f"Invalid edge ({a}, {b})", line_no)
        pairs.append((a, b))
    if header is None:
        raise InstanceFormatError("Empty input, expected a 'graph' header")
    if len(pairs) != header[1]:
        raise InstanceFormatError(f"Header declares {header[1]} edges, found {len(pairs)}")
    return UndirectedGraph.from_pairs(header[0], pairs)

"""Reduction from Grid Tiling* to 2-SCSS-(2k-1, 1).

The generated graph has k x k grid gadgets of n_eff x n_eff vertices, where n_eff = n+1
after prepending a dummy track. Row i of gadgets carries n_eff horizontal canonical
paths a_i -> b_i and column j carries n_eff vertical canonical paths c_j -> d_j; every
canonical path weighs exactly alpha. Each allowed pair of a cell becomes a shortcut
that lets the horizontal path ride the last half of a vertical edge. Connector edges of
weight W chain the rows into one t -> s route.

The instance has a solution of cost at most beta iff the tiling has a solution.
"""

import logging
from enum import Enum
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from src.common.exceptions import GridTilingError, WeightOverflowError
from src.common.types import Weight, checked_add, checked_mul
from src.graph.cost import build_solution
from src.graph.digraph import Digraph
from src.graph.instance import Instance, Solution, Walk
from src.hardness.gridtiling import GridTilingInstance, gridtiling_bruteforce

logger = logging.getLogger(__name__)

MAX_N_EFF = 80

BLACK_WEIGHT = 4
GREEN_WEIGHT = 2
ORANGE_WEIGHT = 3
HALF_EDGE_WEIGHT = 2


class GadgetParams(BaseModel):
    """Weights of the reduction, all derived from k and n_eff.

    delta = 7 n_eff^6, W = 53 n_eff^9,
    alpha = delta (n_eff k + 1) + 4 (k + 1) + 4 k (n_eff - 1),
    beta = 2 k alpha + W (k - 1) - (k^2 + k).
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    n_eff: int = Field(..., ge=2, le=MAX_N_EFF)
    delta: Weight
    connector: Weight = Field(..., description="W, the connector edge weight")
    alpha: Weight = Field(..., description="Weight of every canonical path")
    beta: Weight = Field(..., description="Optimum iff the tiling is solvable")
    black: Weight = BLACK_WEIGHT
    green: Weight = GREEN_WEIGHT
    orange: Weight = ORANGE_WEIGHT
    half_edge: Weight = HALF_EDGE_WEIGHT

    @classmethod
    def from_dimensions(cls, k: int, n_eff: int) -> "GadgetParams":
        """Compute the weights with overflow-checked arithmetic.

        Raises:
            GridTilingError: If n_eff exceeds 80 or a weight leaves the 64-bit range
        """
        if n_eff > MAX_N_EFF:
            raise GridTilingError(f"n_eff = {n_eff} exceeds {MAX_N_EFF}; weights would overflow")
        try:
            delta = checked_mul(7, n_eff**6)
            connector = checked_mul(53, n_eff**9)
            alpha = checked_add(
                checked_mul(delta, n_eff * k + 1),
                BLACK_WEIGHT * (k + 1) + BLACK_WEIGHT * k * (n_eff - 1),
            )
            beta = checked_add(checked_mul(alpha, 2 * k), checked_mul(connector, k - 1))
        except WeightOverflowError as e:
            raise GridTilingError(f"Weights for k={k}, n_eff={n_eff} overflow: {e}") from e
        beta -= k * k + k
        return cls(k=k, n_eff=n_eff, delta=delta, connector=connector, alpha=alpha, beta=beta)

    def first_blue(self, index: int, track: int) -> Weight:
        """Weight of the blue edge leaving a_i (or c_j) on track l."""
        n, k = self.n_eff, self.k
        return self.delta * (n * k - n * index + n + 1 - track)

    def last_blue(self, index: int, track: int) -> Weight:
        """Weight of the blue edge entering b_i (or d_j) on track l."""
        n = self.n_eff
        return self.delta * (n * index - n + track)


class Orientation(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class CanonicalPathId(BaseModel):
    """Names P_i^l (horizontal, row i) or Q_j^l (vertical, column j) on track l."""

    model_config = ConfigDict(frozen=True)

    orientation: Orientation
    index: int = Field(..., ge=1)
    track: int = Field(..., ge=1)


class CanonicalPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: CanonicalPathId
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


class ShortcutKind(str, Enum):
    GREEN = "green"
    ORANGE = "orange"


class Shortcut(BaseModel):
    """Shortcut at r = grid(i, j, x, y): p -> q -> r replaces p -> r, plus u -> q.

    u is r's horizontal predecessor and p its vertical predecessor.
    """

    model_config = ConfigDict(frozen=True)

    kind: ShortcutKind
    gadget: tuple[int, int]
    cell: tuple[int, int] = Field(..., description="(x, y) inside the gadget")
    q: int
    u_to_q: int = Field(..., description="Edge id of the shortcut edge")
    p_to_q: int
    q_to_r: int
    u_to_r: int = Field(..., description="Edge id of the kept horizontal edge")


class LayoutRecord(BaseModel):
    """Vertex labels, canonical paths, and shortcuts of a generated instance."""

    model_config = ConfigDict(frozen=True)

    params: GadgetParams
    labels: tuple[str, ...]
    canonical_paths: tuple[CanonicalPath, ...]
    shortcuts: tuple[Shortcut, ...]

    def vertex(self, label: str) -> int:
        return self.labels.index(label)

    def canonical_path(self, orientation: Orientation, index: int, track: int) -> CanonicalPath:
        wanted = CanonicalPathId(orientation=orientation, index=index, track=track)
        return next(path for path in self.canonical_paths if path.id == wanted)


class GeneratedInstance(NamedTuple):
    instance: Instance
    beta: Weight
    layout: LayoutRecord


def grid_label(i: int, j: int, x: int, y: int) -> str:
    return f"g({i},{j},{x},{y})"


def shortcut_label(i: int, j: int, x: int, y: int) -> str:
    return f"q({i},{j},{x},{y})"


class _Builder:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.ids: dict[str, int] = {}
        self.edges: list[tuple[int, int, int]] = []
        self.edge_ids: dict[tuple[int, int], int] = {}

    def vertex(self, label: str) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.labels)
            self.labels.append(label)
        return self.ids[label]

    def edge(self, tail: str, head: str, weight: Weight) -> int:
        key = (self.vertex(tail), self.vertex(head))
        self.edge_ids[key] = len(self.edges)
        self.edges.append((key[0], key[1], weight))
        return self.edge_ids[key]

    def edge_id(self, tail: str, head: str) -> int:
        return self.edge_ids[(self.ids[tail], self.ids[head])]


def _shortcut_cells(tiling: GridTilingInstance, i: int, j: int) -> set[tuple[int, int]]:
    """Shortcut positions inside gadget (i, j), shifted past the dummy track."""
    return {(x + 1, y + 1) for x, y in tiling.cell(i, j)}


def gridtiling_to_scss(tiling: GridTilingInstance) -> GeneratedInstance:
    """Build the 2-SCSS-(2k-1, 1) instance for a Grid Tiling* instance.

    Returns:
        The instance, beta, and the layout record

    Raises:
        GridTilingError: If the tiling is not a star instance or n + 1 exceeds 80

    Example:
        ```python
        generated = gridtiling_to_scss(clique_to_gridtiling(UndirectedGraph.complete(2), 2))
        generated.beta  # 1186189
        ```
    """
    if not tiling.star:
        raise GridTilingError("The reduction expects a Grid Tiling* instance")
    k, n = tiling.k, tiling.n + 1
    params = GadgetParams.from_dimensions(k, n)
    b = _Builder()
    for label in ("s", "t"):
        b.vertex(label)
    for prefix in "abcd":
        for i in range(1, k + 1):
            b.vertex(f"{prefix}{i}")

    shortcuts_at = {
        (i, j): _shortcut_cells(tiling, i, j) for i in range(1, k + 1) for j in range(1, k + 1)
    }
    shortcut_specs: list[tuple[ShortcutKind, int, int, int, int]] = []

    for i in range(1, k + 1):
        for j in range(1, k + 1):
            for x in range(1, n + 1):
                for y in range(1, n + 1):
                    r = grid_label(i, j, x, y)
                    b.vertex(r)
                    if y > 1:
                        b.edge(grid_label(i, j, x, y - 1), r, BLACK_WEIGHT)
                    if x == 1:
                        continue
                    p = grid_label(i, j, x - 1, y)
                    if (x, y) in shortcuts_at[(i, j)] and y > 1:
                        q = shortcut_label(i, j, x, y)
                        b.edge(p, q, HALF_EDGE_WEIGHT)
                        b.edge(q, r, HALF_EDGE_WEIGHT)
                        kind = ShortcutKind.GREEN if i == j else ShortcutKind.ORANGE
                        weight = GREEN_WEIGHT if i == j else ORANGE_WEIGHT
                        b.edge(grid_label(i, j, x, y - 1), q, weight)
                        shortcut_specs.append((kind, i, j, x, y))
                    else:
                        b.edge(p, r, BLACK_WEIGHT)

    paths: list[tuple[CanonicalPathId, list[str]]] = []
    for index in range(1, k + 1):
        for track in range(1, n + 1):
            h_in, h_out = f"hin({index},{track})", f"hout({index},{track})"
            row = [grid_label(index, j, track, y) for j in range(1, k + 1) for y in range(1, n + 1)]
            _canonical(b, params, f"a{index}", h_in, row, h_out, f"b{index}", index, track)
            paths.append(
                (
                    CanonicalPathId(
                        orientation=Orientation.HORIZONTAL, index=index, track=track
                    ),
                    [f"a{index}", h_in, *row, h_out, f"b{index}"],
                )
            )
            v_in, v_out = f"vin({index},{track})", f"vout({index},{track})"
            column = [
                grid_label(i, index, x, track) for i in range(1, k + 1) for x in range(1, n + 1)
            ]
            _canonical(b, params, f"c{index}", v_in, column, v_out, f"d{index}", index, track)
            paths.append(
                (
                    CanonicalPathId(orientation=Orientation.VERTICAL, index=index, track=track),
                    _with_subdivisions(b, [f"c{index}", v_in, *column, v_out, f"d{index}"]),
                )
            )

    for j in range(1, k + 1):
        b.edge("s", f"c{j}", 0)
        b.edge(f"d{j}", "t", 0)
    b.edge("t", f"a{k}", 0)
    b.edge("b1", "s", 0)
    for i in range(2, k + 1):
        b.edge("s", f"e{i}", 0)
        b.edge(f"f{i}", "t", 0)
        b.edge(f"b{i}", f"e{i}", 0)
        b.edge(f"e{i}", f"f{i}", params.connector)
        b.edge(f"f{i}", f"a{i - 1}", 0)

    try:
        instance = Instance(
            graph=Digraph(len(b.labels), b.edges), s=b.ids["s"], t=b.ids["t"], k1=2 * k - 1, k2=1
        )
    except WeightOverflowError as e:
        raise GridTilingError(f"Generated instance overflows: {e}") from e

    canonical_paths = tuple(
        CanonicalPath(
            id=path_id,
            vertices=tuple(b.ids[label] for label in labels),
            edges=tuple(b.edge_id(a, c) for a, c in zip(labels, labels[1:])),
        )
        for path_id, labels in paths
    )
    shortcuts = tuple(
        Shortcut(
            kind=kind,
            gadget=(i, j),
            cell=(x, y),
            q=b.ids[shortcut_label(i, j, x, y)],
            u_to_q=b.edge_id(grid_label(i, j, x, y - 1), shortcut_label(i, j, x, y)),
            p_to_q=b.edge_id(grid_label(i, j, x - 1, y), shortcut_label(i, j, x, y)),
            q_to_r=b.edge_id(shortcut_label(i, j, x, y), grid_label(i, j, x, y)),
            u_to_r=b.edge_id(grid_label(i, j, x, y - 1), grid_label(i, j, x, y)),
        )
        for kind, i, j, x, y in shortcut_specs
    )
    layout = LayoutRecord(
        params=params,
        labels=tuple(b.labels),
        canonical_paths=canonical_paths,
        shortcuts=shortcuts,
    )
    logger.info(
        "Generated hardness instance: k=%d n_eff=%d vertices=%d edges=%d beta=%d",
        k,
        n,
        instance.graph.n,
        instance.graph.m,
        params.beta,
    )
    return GeneratedInstance(instance=instance, beta=params.beta, layout=layout)


def _canonical(
    b: _Builder,
    params: GadgetParams,
    source: str,
    port_in: str,
    track_vertices: list[str],
    port_out: str,
    sink: str,
    index: int,
    track: int,
) -> None:
    """Add the edges of one canonical path that lie outside the gadgets."""
    n = params.n_eff
    b.edge(source, port_in, params.first_blue(index, track))
    b.edge(port_in, track_vertices[0], BLACK_WEIGHT)
    for position in range(n, len(track_vertices), n):
        b.edge(track_vertices[position - 1], track_vertices[position], BLACK_WEIGHT)
    b.edge(track_vertices[-1], port_out, BLACK_WEIGHT)
    b.edge(port_out, sink, params.last_blue(index, track))


def _with_subdivisions(b: _Builder, labels: list[str]) -> list[str]:
    """Insert shortcut vertices where a vertical edge was subdivided."""
    result = [labels[0]]
    for tail, head in zip(labels, labels[1:]):
        if (b.ids[tail], b.ids[head]) not in b.edge_ids:
            # subdivided: the only way from tail to head runs through the shortcut vertex
            q = "q" + head[1:]
            result.append(q)
        result.append(head)
    return result


def build_yes_solution(generated: GeneratedInstance, delta: tuple[int, ...]) -> Solution:
    """Assemble the solution of cost beta from a tiling solution delta (1-based values).

    The backward walk runs t -> a_k, then for i = k..1 the horizontal path on track
    delta_i + 1 taking the shortcut in every gadget, then b_i -> e_i -> f_i -> a_(i-1)
    or finally b_1 -> s. Forward walks are s -> e_i -> f_i -> t for i = 2..k and the
    vertical canonical paths on tracks delta_j + 1, framed by s -> c_j and d_j -> t.

    Raises:
        GridTilingError: If delta does not match a shortcut in some gadget
    """
    instance, _, layout = generated
    k, n = layout.params.k, layout.params.n_eff
    if len(delta) != k:
        raise GridTilingError(f"Expected {k} values, got {len(delta)}")
    tracks = [value + 1 for value in delta]
    labels = set(layout.labels)

    route = ["t", f"a{k}"]
    for i in range(k, 0, -1):
        x = tracks[i - 1]
        route.append(f"hin({i},{x})")
        for j in range(1, k + 1):
            y = tracks[j - 1]
            q = shortcut_label(i, j, x, y)
            if q not in labels:
                raise GridTilingError(f"No shortcut at {grid_label(i, j, x, y)}: delta fails")
            for column in range(1, n + 1):
                if column == y:
                    route.append(q)
                route.append(grid_label(i, j, x, column))
        route.extend([f"hout({i},{x})", f"b{i}"])
        route.extend([f"e{i}", f"f{i}", f"a{i - 1}"] if i > 1 else ["s"])

    graph = instance.graph
    backward = Walk.from_vertices(graph, [layout.vertex(label) for label in route])
    forward = [
        Walk.from_vertices(graph, [layout.vertex(label) for label in ("s", f"e{i}", f"f{i}", "t")])
        for i in range(2, k + 1)
    ]
    for j in range(1, k + 1):
        column = layout.canonical_path(Orientation.VERTICAL, j, tracks[j - 1])
        vertices = [layout.vertex("s"), *column.vertices, layout.vertex("t")]
        forward.append(Walk.from_vertices(graph, vertices))
    return build_solution(instance, forward, [backward])


class CertificateVerdict(BaseModel):
    """Outcome of checking a solve result against beta and the tiling brute force."""

    cost: Weight
    beta: Weight
    within_beta: bool
    tiling_solvable: bool | None = None
    consistent: bool | None = None


def certify(
    generated: GeneratedInstance,
    cost: Weight,
    tiling: GridTilingInstance | None = None,
) -> CertificateVerdict:
    """Compare an optimum cost with beta, and with brute force when the tiling is given.

    The verdict is consistent when "cost <= beta" agrees with the tiling having a
    solution. The layout's beta is also recomputed from its parameters.

    Raises:
        GridTilingError: If the stored beta disagrees with the formula
    """
    params = generated.layout.params
    expected = GadgetParams.from_dimensions(params.k, params.n_eff).beta
    if generated.beta != expected or params.beta != expected:
        raise GridTilingError(f"Stored beta {generated.beta} differs from formula {expected}")
    within = cost <= generated.beta
    if tiling is None:
        return CertificateVerdict(cost=cost, beta=generated.beta, within_beta=within)
    solvable = gridtiling_bruteforce(tiling) is not None
    return CertificateVerdict(
        cost=cost,
        beta=generated.beta,
        within_beta=within,
        tiling_solvable=solvable,
        consistent=within == solvable,
    )

"""Text formats for instances and solutions.

Edge-weighted instance:

    scss <n> <m> <k1> <k2>
    s <id>
    t <id>
    e <tail> <head> <weight>      (m lines)

Vertex-weighted instance:

    vscss <n> <m> <k1> <k2>
    s <id>
    t <id>
    w <vertex> <weight>           (optional, unlisted vertices weigh 0)
    e <tail> <head>               (m lines)

Solution:

    cost <value>
    forward[<i>]: <v0> <v1> ...
    backward[<j>]: <v0> <v1> ...

Blank lines and lines starting with `#` are ignored everywhere. Every diagnostic names
the 1-based line it concerns.
"""

import re
from collections.abc import Iterator

from src.common.exceptions import InstanceFormatError, WalkError
from src.common.types import MAX_WEIGHT
from src.graph.digraph import Digraph
from src.graph.instance import Instance, Solution, VertexWeightedInstance, Walk

_WALK_LINE = re.compile(r"^(forward|backward)\[(\d+)\]:\s*(.*)$")


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line.split()


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"{what} must be an integer, got {token!r}", line_no) from None


def _vertex(token: str, n: int, line_no: int) -> int:
    v = _int(token, line_no, "Vertex id")
    if not 0 <= v < n:
        raise InstanceFormatError(f"Vertex id {v} is outside 0..{n - 1}", line_no)
    return v


def _weight(token: str, line_no: int) -> int:
    w = _int(token, line_no, "Weight")
    if w < 0:
        raise InstanceFormatError(f"Negative weight {w}", line_no)
    if w > MAX_WEIGHT:
        raise InstanceFormatError(f"Weight {w} exceeds the 64-bit range", line_no)
    return w


class _Header:
    """Parsed header plus terminal declarations shared by both instance formats."""

    def __init__(self, n: int, m: int, k1: int, k2: int):
        self.n = n
        self.m = m
        self.k1 = k1
        self.k2 = k2
        self.s: int | None = None
        self.t: int | None = None

    def declare_terminal(self, tokens: list[str], line_no: int) -> None:
        if len(tokens) != 2:
            raise InstanceFormatError(f"Expected '{tokens[0]} <id>'", line_no)
        v = _vertex(tokens[1], self.n, line_no)
        if getattr(self, tokens[0]) is not None:
            raise InstanceFormatError(f"Duplicate terminal declaration '{tokens[0]}'", line_no)
        setattr(self, tokens[0], v)

    def finish(self, edge_count: int) -> tuple[int, int]:
        if self.s is None or self.t is None:
            raise InstanceFormatError("Missing terminal declaration for s or t")
        if self.s == self.t:
            raise InstanceFormatError(f"Terminals s and t must differ, both are {self.s}")
        if edge_count != self.m:
            raise InstanceFormatError(
                f"Header declares {self.m} edges, found {edge_count}"
            )
        return self.s, self.t


def _read_header(records: Iterator[tuple[int, list[str]]], keyword: str) -> _Header:
    try:
        line_no, tokens = next(records)
    except StopIteration:
        raise InstanceFormatError(f"Empty input, expected a '{keyword}' header") from None
    if len(tokens) != 5 or tokens[0] != keyword:
        raise InstanceFormatError(f"Malformed header, expected '{keyword} n m k1 k2'", line_no)
    n, m, k1, k2 = (_int(token, line_no, "Header field") for token in tokens[1:])
    if n < 2 or m < 0:
        raise InstanceFormatError(f"Malformed header: n={n}, m={m}", line_no)
    if k1 < 1 or k2 < 1:
        raise InstanceFormatError(f"Demands must be positive, got ({k1}, {k2})", line_no)
    return _Header(n, m, k1, k2)


def parse_instance(text: str) -> Instance:
    """Parse an edge-weighted instance.

    Raises:
        InstanceFormatError: On a malformed header, dangling vertex id, negative weight,
            duplicate terminal declaration, or edge-count mismatch

    Example:
        ```python
        instance = parse_instance("scss 2 1 1 1\\ns 0\\nt 1\\ne 0 1 5\\n")
        instance.graph.m  # 1
        ```
    """
    records = _records(text)
    header = _read_header(records, "scss")
    edges: list[tuple[int, int, int]] = []
    for line_no, tokens in records:
        kind = tokens[0]
        if kind in ("s", "t"):
            header.declare_terminal(tokens, line_no)
        elif kind == "e":
            if len(tokens) != 4:
                raise InstanceFormatError("Expected 'e <tail> <head> <weight>'", line_no)
            edges.append(
                (
                    _vertex(tokens[1], header.n, line_no),
                    _vertex(tokens[2], header.n, line_no),
                    _weight(tokens[3], line_no),
                )
            )
        else:
            raise InstanceFormatError(f"Unknown record type {kind!r}", line_no)
    s, t = header.finish(len(edges))
    try:
        return Instance(graph=Digraph(header.n, edges), s=s, t=t, k1=header.k1, k2=header.k2)
    except (ValueError, OverflowError) as e:
        raise InstanceFormatError(str(e)) from e


def serialize_instance(instance: Instance) -> str:
    graph = instance.graph
    lines = [
        f"scss {graph.n} {graph.m} {instance.k1} {instance.k2}",
        f"s {instance.s}",
        f"t {instance.t}",
    ]
    lines.extend(f"e {e.tail} {e.head} {e.weight}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def parse_vertex_weighted(text: str) -> VertexWeightedInstance:
    """Parse a vertex-weighted instance; edge records carry no weight.

    Raises:
        InstanceFormatError: On the same conditions as `parse_instance`, plus duplicate
            vertex-weight records
    """
    records = _records(text)
    header = _read_header(records, "vscss")
    weights = [0] * header.n
    weighted: set[int] = set()
    edges: list[tuple[int, int, int]] = []
    for line_no, tokens in records:
        kind = tokens[0]
        if kind in ("s", "t"):
            header.declare_terminal(tokens, line_no)
        elif kind == "w":
            if len(tokens) != 3:
                raise InstanceFormatError("Expected 'w <vertex> <weight>'", line_no)
            v = _vertex(tokens[1], header.n, line_no)
            if v in weighted:
                raise InstanceFormatError(f"Duplicate weight for vertex {v}", line_no)
            weighted.add(v)
            weights[v] = _weight(tokens[2], line_no)
        elif kind == "e":
            if len(tokens) != 3:
                raise InstanceFormatError("Expected 'e <tail> <head>'", line_no)
            edges.append(
                (_vertex(tokens[1], header.n, line_no), _vertex(tokens[2], header.n, line_no), 0)
            )
        else:
            raise InstanceFormatError(f"Unknown record type {kind!r}", line_no)
    s, t = header.finish(len(edges))
    try:
        return VertexWeightedInstance(
            graph=Digraph(header.n, edges),
            vertex_weights=tuple(weights),
            s=s,
            t=t,
            k1=header.k1,
            k2=header.k2,
        )
    except (ValueError, OverflowError) as e:
        raise InstanceFormatError(str(e)) from e


def serialize_vertex_weighted(vwi: VertexWeightedInstance) -> str:
    graph = vwi.graph
    lines = [
        f"vscss {graph.n} {graph.m} {vwi.k1} {vwi.k2}",
        f"s {vwi.s}",
        f"t {vwi.t}",
    ]
    lines.extend(f"w {v} {w}" for v, w in enumerate(vwi.vertex_weights) if w)
    lines.extend(f"e {e.tail} {e.head}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def serialize_solution(solution: Solution) -> str:
    lines = [f"cost {solution.cost}"]
    for i, walk in enumerate(solution.forward):
        lines.append(f"forward[{i}]: " + " ".join(map(str, walk.vertices)))
    for j, walk in enumerate(solution.backward):
        lines.append(f"backward[{j}]: " + " ".join(map(str, walk.vertices)))
    return "\n".join(lines) + "\n"


def parse_solution(text: str, graph: Digraph) -> Solution:
    """Parse a solution file against the graph its walks live in.

    Each hop is mapped to the cheapest matching edge, so the result is the cheapest
    reading of the listed vertex sequences. Endpoints and walk counts are not checked
    here; that is `verify`'s job.

    Raises:
        InstanceFormatError: On syntax errors, a missing cost line, or gapped walk indices
        WalkError: If a listed hop has no edge in the graph
    """
    cost: int | None = None
    walks: dict[str, dict[int, Walk]] = {"forward": {}, "backward": {}}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("cost"):
            tokens = line.split()
            if len(tokens) != 2 or cost is not None:
                raise InstanceFormatError("Expected a single 'cost <value>' line", line_no)
            cost = _weight(tokens[1], line_no)
            continue
        match = _WALK_LINE.match(line)
        if match is None:
            raise InstanceFormatError(f"Unrecognized solution line {line!r}", line_no)
        side, index = match.group(1), int(match.group(2))
        if index in walks[side]:
            raise InstanceFormatError(f"Duplicate {side}[{index}]", line_no)
        vertices = [_int(token, line_no, "Vertex id") for token in match.group(3).split()]
        try:
            walks[side][index] = Walk.from_vertices(graph, vertices)
        except WalkError as e:
            raise WalkError(f"line {line_no}: {e}") from e
    if cost is None:
        raise InstanceFormatError("Missing 'cost' line")
    ordered: dict[str, tuple[Walk, ...]] = {}
    for side, by_index in walks.items():
        if sorted(by_index) != list(range(len(by_index))):
            raise InstanceFormatError(f"{side} walk indices must be 0..{len(by_index) - 1}")
        ordered[side] = tuple(by_index[i] for i in range(len(by_index)))
    return Solution(forward=ordered["forward"], backward=ordered["backward"], cost=cost)

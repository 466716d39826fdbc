"""The 22-vertex instance whose (2,2) optima are never general-reverse-compatible.

Vertices: s=0, t=1, u1..u10 = 2..11, v1..v10 = 12..21. Two weight-1 chains s->u1..u10->t
and s->v1..v10->t carry the forward paths; eight weight-0 edges let two backward paths
reuse the chains for free. The optimum with demands (2,2) is 22.
"""

from collections.abc import Callable

from src.graph.cost import build_solution
from src.graph.digraph import Digraph
from src.graph.instance import Instance, Solution, Walk

S, T = 0, 1


def u_vertex(i: int) -> int:
    return 1 + i


def v_vertex(i: int) -> int:
    return 11 + i


COUNTEREXAMPLE_LABELS: dict[int, str] = {
    S: "s",
    T: "t",
    **{u_vertex(i): f"u{i}" for i in range(1, 11)},
    **{v_vertex(i): f"v{i}" for i in range(1, 11)},
}

_FREE_EDGES = [
    (T, v_vertex(7)),
    (T, v_vertex(9)),
    (v_vertex(8), u_vertex(3)),
    (v_vertex(10), u_vertex(1)),
    (u_vertex(2), v_vertex(1)),
    (v_vertex(6), u_vertex(5)),
    (u_vertex(4), S),
    (u_vertex(6), S),
]


def _chain(label: Callable[[int], int]) -> list[int]:
    return [S] + [label(i) for i in range(1, 11)] + [T]


def build_counterexample(k1: int = 2, k2: int = 2) -> Instance:
    """Build the fixture graph; demands default to (2, 2)."""
    edges: list[tuple[int, int, int]] = []
    for chain in (_chain(u_vertex), _chain(v_vertex)):
        edges.extend((a, b, 1) for a, b in zip(chain, chain[1:]))
    edges.extend((a, b, 0) for a, b in _FREE_EDGES)
    return Instance(graph=Digraph(22, edges), s=S, t=T, k1=k1, k2=k2)


def counterexample_paths() -> dict[str, list[int]]:
    """Vertex sequences of the four paths forming the weight-22 solution."""
    return {
        "P1": _chain(u_vertex),
        "P2": _chain(v_vertex),
        "P3": [T, v_vertex(7), v_vertex(8), u_vertex(3), u_vertex(4), S],
        "P4": [T, v_vertex(9), v_vertex(10), u_vertex(1), u_vertex(2)]
        + [v_vertex(i) for i in range(1, 7)]
        + [u_vertex(5), u_vertex(6), S],
    }


def counterexample_solution(instance: Instance | None = None) -> Solution:
    """P1, P2 forward and P3, P4 backward; costs 22."""
    instance = instance or build_counterexample()
    paths = counterexample_paths()
    walks = {name: Walk.from_vertices(instance.graph, seq) for name, seq in paths.items()}
    return build_solution(
        instance, [walks["P1"], walks["P2"]], [walks["P3"], walks["P4"]]
    )

"""Seeded random instance generators.

Every generator draws from its own `random.Random(seed)`, so equal arguments produce
equal instances on every platform.
"""

import random

from src.common.exceptions import InvalidInstanceError
from src.graph.digraph import Digraph
from src.graph.instance import Instance, VertexWeightedInstance


def _random_edges(
    rng: random.Random, n: int, m: int, strongly_connected: bool
) -> list[tuple[int, int]]:
    if n < 2:
        raise InvalidInstanceError(f"Need at least 2 vertices, got {n}")
    if m < 0:
        raise InvalidInstanceError(f"Edge count must be non-negative, got {m}")
    pairs: list[tuple[int, int]] = []
    if strongly_connected:
        if m < n:
            raise InvalidInstanceError(
                f"A strongly connected instance on {n} vertices needs m >= {n}, got {m}"
            )
        order = list(range(n))
        rng.shuffle(order)
        pairs.extend(zip(order, order[1:] + order[:1]))
    while len(pairs) < m:
        tail = rng.randrange(n)
        head = rng.randrange(n)
        if tail != head:
            pairs.append((tail, head))
    return pairs


def random_instance(
    n: int,
    m: int,
    wmax: int,
    k1: int,
    k2: int,
    seed: int,
    strongly_connected: bool = False,
) -> Instance:
    """Generate a random edge-weighted instance with s=0 and t=1.

    Args:
        n: Number of vertices (>= 2)
        m: Number of edges; parallel edges may occur, self-loops never do
        wmax: Weights are drawn uniformly from 0..wmax
        k1: Forward demand
        k2: Backward demand
        seed: Seed for the private random generator
        strongly_connected: Start from a random Hamiltonian cycle so every vertex pair
            is connected (requires m >= n)

    Returns:
        The generated instance

    Raises:
        InvalidInstanceError: If the parameters cannot produce an instance
    """
    if wmax < 0:
        raise InvalidInstanceError(f"wmax must be non-negative, got {wmax}")
    rng = random.Random(seed)
    pairs = _random_edges(rng, n, m, strongly_connected)
    edges = [(tail, head, rng.randint(0, wmax)) for tail, head in pairs]
    return Instance(graph=Digraph(n, edges), s=0, t=1, k1=k1, k2=k2)


def random_vertex_weighted(
    n: int,
    m: int,
    wmax: int,
    k1: int,
    k2: int,
    seed: int,
    strongly_connected: bool = False,
) -> VertexWeightedInstance:
    """Generate a random vertex-weighted instance with s=0 and t=1.

    Terminals get weight 0; they never contribute to the cost anyway.
    """
    if wmax < 0:
        raise InvalidInstanceError(f"wmax must be non-negative, got {wmax}")
    rng = random.Random(seed)
    pairs = _random_edges(rng, n, m, strongly_connected)
    weights = tuple(0 if v in (0, 1) else rng.randint(0, wmax) for v in range(n))
    return VertexWeightedInstance(
        graph=Digraph(n, [(tail, head, 0) for tail, head in pairs]),
        vertex_weights=weights,
        s=0,
        t=1,
        k1=k1,
        k2=k2,
    )

"""Hypothesis strategies for small feasible instances."""

from hypothesis import strategies as st

from src.graph.digraph import Digraph
from src.graph.instance import Instance


@st.composite
def instances(
    draw: st.DrawFn,
    max_n: int = 6,
    max_extra_edges: int = 6,
    max_weight: int = 10,
    k1: st.SearchStrategy[int] = st.integers(1, 2),
    k2: st.SearchStrategy[int] = st.integers(1, 2),
) -> Instance:
    """A cycle s -> 2 -> ... -> t -> s plus random extra edges, so s and t stay connected."""
    n = draw(st.integers(2, max_n))
    weights = st.integers(0, max_weight)
    order = [0, *range(2, n), 1]
    edges = [(a, b, draw(weights)) for a, b in zip(order, order[1:] + [0])]
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), weights),
            max_size=max_extra_edges,
        )
    )
    edges.extend((a, b, w) for a, b, w in extra if a != b)
    return Instance(graph=Digraph(n, edges), s=0, t=1, k1=draw(k1), k2=draw(k2))

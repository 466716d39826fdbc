"""Shared subpaths, reverse-compatibility, rank, and the rewiring step.

A forward walk F and a backward walk B share maximal subpaths P1..Pd, listed in the
order F traverses them. The pair is path-reverse-compatible when B meets them in
exactly the opposite order. Maximality is judged on edge sequences: two consecutive
edges of F stay in one subpath only if they are also consecutive in B.
"""

import logging
from collections import Counter
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field

from src.common.exceptions import StructureError
from src.graph.instance import Walk

logger = logging.getLogger(__name__)


class SharedSubpath(BaseModel):
    """One maximal common subpath.

    Attributes:
        edges: Edge ids of the subpath
        forward_index: Index of its first edge in the forward walk
        backward_index: Index of its first edge in the backward walk
    """

    model_config = ConfigDict(frozen=True)

    edges: tuple[int, ...] = Field(..., min_length=1)
    forward_index: int = Field(..., ge=0)
    backward_index: int = Field(..., ge=0)


class SharedSubpathDecomposition(BaseModel):
    """Maximal shared subpaths of a forward/backward pair, in forward order."""

    model_config = ConfigDict(frozen=True)

    subpaths: tuple[SharedSubpath, ...] = ()

    @property
    def d(self) -> int:
        return len(self.subpaths)

    @property
    def backward_order(self) -> list[int]:
        """Backward positions of the subpaths, in forward order."""
        return [p.backward_index for p in self.subpaths]

    def is_reversed(self) -> bool:
        order = self.backward_order
        return all(a > b for a, b in zip(order, order[1:]))


def shared_subpaths(forward: Walk, backward: Walk) -> SharedSubpathDecomposition:
    """Decompose the edges shared by a forward and a backward walk into maximal runs.

    An edge that B traverses more than once is located at its first occurrence.

    Example:
        ```python
        decomposition = shared_subpaths(F, B)
        decomposition.d  # number of maximal shared subpaths
        ```
    """
    position: dict[int, int] = {}
    for index, edge_id in enumerate(backward.edges):
        position.setdefault(edge_id, index)

    subpaths: list[SharedSubpath] = []
    run: list[int] = []
    run_start = 0
    for index, edge_id in enumerate(forward.edges):
        if edge_id not in position:
            if run:
                subpaths.append(_subpath(run, run_start, position))
                run = []
            continue
        if run and position[edge_id] == position[run[-1]] + 1:
            run.append(edge_id)
            continue
        if run:
            subpaths.append(_subpath(run, run_start, position))
        run = [edge_id]
        run_start = index
    if run:
        subpaths.append(_subpath(run, run_start, position))
    return SharedSubpathDecomposition(subpaths=tuple(subpaths))


def _subpath(run: list[int], start: int, position: dict[int, int]) -> SharedSubpath:
    return SharedSubpath(
        edges=tuple(run), forward_index=start, backward_index=position[run[0]]
    )


def is_path_reverse_compatible(forward: Walk, backward: Walk) -> bool:
    """True iff B meets the shared subpaths in exactly the reverse of F's order."""
    return shared_subpaths(forward, backward).is_reversed()


def is_reverse_compatible(forward_set: Sequence[Walk], backward: Walk) -> bool:
    return all(is_path_reverse_compatible(f, backward) for f in forward_set)


def is_general_reverse_compatible(
    forward_set: Sequence[Walk], backward_set: Sequence[Walk]
) -> bool:
    return all(is_reverse_compatible(forward_set, b) for b in backward_set)


def rank(forward_set: Sequence[Walk], backward: Walk) -> int:
    """Total number of maximal shared subpaths over all forward walks."""
    return sum(shared_subpaths(f, backward).d for f in forward_set)


def first_violation(forward_set: Sequence[Walk], backward: Walk) -> int | None:
    """Index of the first forward walk that is not path-reverse-compatible with B."""
    for index, forward in enumerate(forward_set):
        if not is_path_reverse_compatible(forward, backward):
            return index
    return None


def rewire_step(forward_set: Sequence[Walk], backward: Walk, index: int) -> Walk:
    """Reroute B along F_i between two shared subpaths that B sees in F_i's order.

    Picks the first adjacent pair Pa, Pa+1 (in F_i order) that B meets in the same
    order, and replaces B's stretch from the start of Pa to the end of Pa+1 with F_i's
    stretch between the same vertices. With pairwise edge-disjoint forward walks and a
    backward walk without repeated edges, the cost of the solution does not increase and
    the rank drops by at least one.

    Args:
        forward_set: Forward walks, pairwise edge-disjoint
        backward: The backward walk
        index: Index of a forward walk that is not path-reverse-compatible with B

    Returns:
        The rewired backward walk

    Raises:
        StructureError: If the forward walks share an edge, or the pair is compatible
    """
    usage = Counter(edge_id for walk in forward_set for edge_id in walk.edges)
    repeated = sorted(edge_id for edge_id, count in usage.items() if count > 1)
    if repeated:
        raise StructureError(f"Forward walks are not edge-disjoint, repeated edges {repeated}")
    forward = forward_set[index]
    decomposition = shared_subpaths(forward, backward)
    if decomposition.is_reversed():
        raise StructureError(f"Forward walk {index} is already path-reverse-compatible")

    subpaths = decomposition.subpaths
    a = next(
        j for j in range(len(subpaths) - 1)
        if subpaths[j].backward_index < subpaths[j + 1].backward_index
    )
    first, second = subpaths[a], subpaths[a + 1]
    forward_stretch = forward.edges[
        first.forward_index : second.forward_index + len(second.edges)
    ]
    cut_from = first.backward_index
    cut_to = second.backward_index + len(second.edges)
    edges = backward.edges[:cut_from] + forward_stretch + backward.edges[cut_to:]
    vertices = (
        backward.vertices[:cut_from]
        + forward.vertices[first.forward_index : second.forward_index + len(second.edges) + 1]
        + backward.vertices[cut_to + 1 :]
    )
    logger.debug(
        "Rewired backward walk along forward walk %d between subpaths %d and %d",
        index,
        a,
        a + 1,
    )
    return Walk(vertices=vertices, edges=edges)


def rewire_until_compatible(
    forward_set: Sequence[Walk], backward: Walk, max_steps: int | None = None
) -> tuple[Walk, int]:
    """Apply `rewire_step` until B is reverse-compatible with every forward walk.

    Each step lowers the rank, so at most rank(F, B) steps run.

    Returns:
        The final backward walk and the number of steps taken

    Raises:
        StructureError: If the preconditions of `rewire_step` fail, or `max_steps` runs out
    """
    limit = rank(forward_set, backward) if max_steps is None else max_steps
    steps = 0
    while (index := first_violation(forward_set, backward)) is not None:
        if steps >= limit:
            raise StructureError(f"Still not reverse-compatible after {steps} rewiring steps")
        backward = rewire_step(forward_set, backward, index)
        steps += 1
    return backward, steps


class PairReport(BaseModel):
    forward: int
    backward: int
    d: int
    backward_order: list[int]
    compatible: bool


class StructureReport(BaseModel):
    """Compatibility of every forward/backward pair of a solution, plus ranks."""

    pairs: list[PairReport] = Field(default_factory=list)
    ranks: list[int] = Field(default_factory=list, description="rank(F, B_j) per backward walk")
    general_reverse_compatible: bool


def structure_report(
    forward_set: Sequence[Walk], backward_set: Sequence[Walk]
) -> StructureReport:
    pairs = []
    for j, backward in enumerate(backward_set):
        for i, forward in enumerate(forward_set):
            decomposition = shared_subpaths(forward, backward)
            pairs.append(
                PairReport(
                    forward=i,
                    backward=j,
                    d=decomposition.d,
                    backward_order=decomposition.backward_order,
                    compatible=decomposition.is_reversed(),
                )
            )
    return StructureReport(
        pairs=pairs,
        ranks=[rank(forward_set, backward) for backward in backward_set],
        general_reverse_compatible=all(pair.compatible for pair in pairs),
    )

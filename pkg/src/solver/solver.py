"""Exact 2-SCSS-(k,1) solver built on the token game."""

import logging

from src.common.config import SolverConfig
from src.common.exceptions import DemandShapeError, ReplayError
from src.game.token_game import GamePlay, MoveKind, TokenState, apply_move, solve_token_game
from src.graph.cost import build_solution
from src.graph.instance import Instance, Solution, Walk
from src.graph.shortest_paths import ShortestPathTable, all_pairs_shortest_paths

logger = logging.getLogger(__name__)


def solve(instance: Instance, config: SolverConfig | None = None) -> Solution:
    """Solve an instance with k2 = 1 exactly.

    Args:
        instance: Instance whose backward demand is 1
        config: Time budget and logging settings

    Returns:
        An optimal Solution with k1 forward walks and one backward walk

    Raises:
        DemandShapeError: If instance.k2 != 1
        InfeasibleError: If s and t are not strongly connected
        TimeBudgetExceeded: If the configured budget runs out

    Example:
        ```python
        graph = Digraph(2, [(0, 1, 2), (1, 0, 3)])
        solve(Instance(graph=graph, s=0, t=1, k1=3, k2=1)).cost  # 9
        ```
    """
    solution, _ = solve_with_play(instance, config)
    return solution


def solve_with_play(
    instance: Instance, config: SolverConfig | None = None
) -> tuple[Solution, GamePlay]:
    """Like `solve`, but also return the underlying play and its search statistics.

    Raises:
        ReplayError: If the reconstructed walks do not cost exactly the play cost
    """
    if instance.k2 != 1:
        raise DemandShapeError(
            f"The exact solver handles k2 = 1 only, got demands ({instance.k1}, {instance.k2})"
        )
    spt = all_pairs_shortest_paths(instance.graph)
    play = solve_token_game(
        instance.graph, instance.s, instance.t, instance.k1, spt=spt, config=config
    )
    solution = reconstruct_solution(play, spt, instance.k1, instance)
    if solution.cost != play.cost:
        raise ReplayError(
            f"Reconstructed walks cost {solution.cost}, the optimal play costs {play.cost}"
        )
    return solution, play


def reconstruct_solution(
    play: GamePlay, spt: ShortestPathTable, k: int, instance: Instance
) -> Solution:
    """Turn a start-to-end play into concrete walks.

    Tokens are labeled during the replay; a move acting on a position moves the
    lowest-labeled token there. Forward edges extend that token's walk. A Flip appends
    the stored shortest path to the token's walk and records it as a backward segment,
    as does every Backward edge. The backward walk is the recorded segments in reverse
    order.

    The returned cost is recomputed from the walks. For an optimal play it equals the
    play cost; for any play it is never larger.

    Raises:
        ReplayError: If the play is not a valid start-to-end play
    """
    if k != play.k or k != instance.k1:
        raise ReplayError(f"Play has {play.k} tokens, expected k = {k} = k1 = {instance.k1}")
    graph = instance.graph
    state = TokenState.start(instance.s, k)
    tokens = [instance.s] * k
    forward_edges: list[list[int]] = [[] for _ in range(k)]
    segments: list[list[int]] = []
    backward_pos = instance.s

    for move in play.moves:
        state = apply_move(state, move, graph, spt)
        if move.kind is MoveKind.BACKWARD:
            segments.append([move.edge])
            backward_pos = graph.edges[move.edge].tail
            continue
        label = tokens.index(move.position)
        if move.kind is MoveKind.FORWARD:
            forward_edges[label].append(move.edge)
            tokens[label] = graph.edges[move.edge].head
        else:
            segment = spt.path(move.position, backward_pos)
            forward_edges[label].extend(segment)
            segments.append(segment)
            tokens[label], backward_pos = backward_pos, move.position

    if state != TokenState.end(instance.t, k):
        raise ReplayError(f"Play ends in {state}, not in the end state")

    backward_edges = [edge_id for segment in reversed(segments) for edge_id in segment]
    forward = [Walk.from_edges(graph, instance.s, edges) for edges in forward_edges]
    backward = [Walk.from_edges(graph, instance.t, backward_edges)]
    solution = build_solution(instance, forward, backward)
    if solution.cost != play.cost:
        logger.debug("Reconstructed cost %d differs from play cost %d", solution.cost, play.cost)
    return solution

"""Token game for 2-SCSS-(k,1): states, moves, and minimum-cost play.

One backward token walks the reverse of the t->s path while k forward tokens walk the
s->t paths. All tokens start on s and must finish on t. A Flip swaps a forward token with
the backward token; its cost is the shortest path between them, which both tokens then
share.

States keep forward tokens as a sorted tuple, since the tokens are interchangeable.
The game graph is never built; successors are generated when a state is settled.
"""

import bisect
import heapq
import logging
import time
from enum import Enum
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from src.common.config import SolverConfig
from src.common.exceptions import InfeasibleError, ReplayError, TimeBudgetExceeded
from src.common.types import Weight
from src.graph.digraph import Digraph, Edge
from src.graph.shortest_paths import ShortestPathTable, all_pairs_shortest_paths

logger = logging.getLogger(__name__)

_BUDGET_CHECK_EVERY = 1024


class TokenState(NamedTuple):
    """Backward token position and the sorted forward token positions."""

    backward: int
    forward: tuple[int, ...]

    @classmethod
    def make(cls, backward: int, forward: tuple[int, ...] | list[int]) -> "TokenState":
        """Build a canonical state from forward positions in any order."""
        return cls(backward, tuple(sorted(forward)))

    @classmethod
    def start(cls, s: int, k: int) -> "TokenState":
        return cls(s, (s,) * k)

    @classmethod
    def end(cls, t: int, k: int) -> "TokenState":
        return cls(t, (t,) * k)


class MoveKind(str, Enum):
    BACKWARD = "backward"
    FORWARD = "forward"
    FLIP = "flip"


class Move(NamedTuple):
    """One transition of the game.

    Attributes:
        kind: Which move rule applies
        cost: Cost paid for the move
        edge: Edge id for Backward and Forward moves
        position: Forward token position that acts (Forward and Flip moves)
    """

    kind: MoveKind
    cost: Weight
    edge: int | None = None
    position: int | None = None


class GamePlay(BaseModel):
    """A minimum-cost move sequence from the start state to the end state.

    Attributes:
        k: Number of forward tokens
        moves: Moves in play order
        cost: Sum of move costs
        visited_states: States settled by the search
        expanded_moves: Moves generated while expanding settled states
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    moves: tuple[Move, ...] = Field(default=())
    cost: Weight = Field(..., ge=0)
    visited_states: int = Field(default=0, ge=0)
    expanded_moves: int = Field(default=0, ge=0)


def _replace(forward: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    tokens = list(forward)
    del tokens[bisect.bisect_left(tokens, old)]
    bisect.insort(tokens, new)
    return tuple(tokens)


def _distinct(forward: tuple[int, ...]) -> list[int]:
    positions: list[int] = []
    for v in forward:
        if not positions or positions[-1] != v:
            positions.append(v)
    return positions


def neighbors(
    state: TokenState, graph: Digraph, spt: ShortestPathTable, k: int
) -> list[tuple[Move, TokenState]]:
    """Generate every move available from a canonical state.

    Emits one Backward move per in-edge of the backward position, one Forward move per
    out-edge of each distinct forward position, and one Flip per distinct forward
    position other than the backward one that can reach it. Self-loops are skipped.
    The result has at most in_degree(v0) + sum(out_degree(v_i)) + k entries.

    Raises:
        ValueError: If the state does not hold exactly k forward tokens
    """
    if len(state.forward) != k:
        raise ValueError(f"State holds {len(state.forward)} forward tokens, expected {k}")
    v0, forward = state
    edges = graph.edges
    result: list[tuple[Move, TokenState]] = []

    for edge_id in graph.in_edges[v0]:
        edge = edges[edge_id]
        if edge.tail == v0:
            continue
        result.append(
            (Move(MoveKind.BACKWARD, edge.weight, edge=edge_id), TokenState(edge.tail, forward))
        )

    for position in _distinct(forward):
        for edge_id in graph.out_edges[position]:
            edge = edges[edge_id]
            if edge.head == position:
                continue
            result.append(
                (
                    Move(MoveKind.FORWARD, edge.weight, edge=edge_id, position=position),
                    TokenState(v0, _replace(forward, position, edge.head)),
                )
            )
        if position == v0:
            continue
        distance = spt.dist(position, v0)
        if distance is None:
            continue
        result.append(
            (
                Move(MoveKind.FLIP, distance, position=position),
                TokenState(position, _replace(forward, position, v0)),
            )
        )
    return result


def apply_move(
    state: TokenState, move: Move, graph: Digraph, spt: ShortestPathTable
) -> TokenState:
    """Apply a single move after checking it is legal and correctly priced.

    Raises:
        ReplayError: If the move does not apply to the state
    """
    v0, forward = state
    if move.kind is MoveKind.BACKWARD:
        edge = _edge(graph, move.edge)
        if edge.head != v0 or edge.tail == v0 or move.cost != edge.weight:
            raise ReplayError(f"Backward move over edge {move.edge} does not apply at {v0}")
        return TokenState(edge.tail, forward)

    if move.position not in forward:
        raise ReplayError(f"No forward token on vertex {move.position}")
    if move.kind is MoveKind.FORWARD:
        edge = _edge(graph, move.edge)
        if edge.tail != move.position or edge.head == edge.tail or move.cost != edge.weight:
            raise ReplayError(
                f"Forward move over edge {move.edge} does not apply at {move.position}"
            )
        return TokenState(v0, _replace(forward, move.position, edge.head))

    distance = spt.dist(move.position, v0)
    if move.position == v0 or distance is None or move.cost != distance:
        raise ReplayError(f"Flip from {move.position} to {v0} is not a valid move")
    return TokenState(move.position, _replace(forward, move.position, v0))


def _edge(graph: Digraph, edge_id: int | None) -> Edge:
    if edge_id is None or not 0 <= edge_id < graph.m:
        raise ReplayError(f"Unknown edge id {edge_id}")
    return graph.edges[edge_id]


def replay(
    play: GamePlay, graph: Digraph, spt: ShortestPathTable, s: int
) -> tuple[TokenState, Weight]:
    """Replay a play from the start state.

    Returns:
        The final state and the summed move cost

    Raises:
        ReplayError: If any move is illegal in the state it is applied to
    """
    state = TokenState.start(s, play.k)
    total = 0
    for move in play.moves:
        state = apply_move(state, move, graph, spt)
        total += move.cost
    return state, total


def solve_token_game(
    graph: Digraph,
    s: int,
    t: int,
    k: int,
    spt: ShortestPathTable | None = None,
    config: SolverConfig | None = None,
) -> GamePlay:
    """Find a minimum-cost play from (s, {s..s}) to (t, {t..t}).

    Runs Dijkstra over the implicit game graph, discovering states lazily and keeping
    only a distance map and a predecessor map keyed by canonical state. States from
    which the end state is unreachable are never enqueued: a forward token must still
    be able to reach t, and t must be able to reach the backward token.

    Args:
        graph: Graph with non-negative weights
        s: Source terminal
        t: Sink terminal
        k: Number of forward tokens (>= 1)
        spt: Precomputed shortest path table for `graph` (computed if omitted)
        config: Time budget and progress logging settings

    Returns:
        A minimum-cost GamePlay with search statistics

    Raises:
        InfeasibleError: If the end state is unreachable
        TimeBudgetExceeded: If the configured time budget runs out

    Example:
        ```python
        graph = Digraph(2, [(0, 1, 2), (1, 0, 3)])
        play = solve_token_game(graph, s=0, t=1, k=1)
        play.cost  # 5
        ```
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    config = config or SolverConfig()
    if spt is None:
        spt = all_pairs_shortest_paths(graph)
    reaches_t = graph.reaching(t)
    reached_from_t = graph.reachable_from(t)
    if s not in reaches_t or s not in reached_from_t:
        raise InfeasibleError(f"Terminals {s} and {t} are not strongly connected")

    def alive(state: TokenState) -> bool:
        return state.backward in reached_from_t and all(v in reaches_t for v in state.forward)

    start = TokenState.start(s, k)
    end = TokenState.end(t, k)
    dist: dict[TokenState, Weight] = {start: 0}
    parent: dict[TokenState, tuple[TokenState, Move]] = {}
    heap: list[tuple[Weight, TokenState]] = [(0, start)]
    visited = 0
    expanded = 0
    deadline = (
        time.monotonic() + config.time_budget_secs if config.time_budget_secs else None
    )

    while heap:
        d, state = heapq.heappop(heap)
        if d > dist[state]:
            continue
        visited += 1
        if state == end:
            break
        if deadline is not None and visited % _BUDGET_CHECK_EVERY == 0:
            if time.monotonic() > deadline:
                raise TimeBudgetExceeded(
                    f"Token game exceeded {config.time_budget_secs}s after {visited} states"
                )
        if visited % config.log_progress_every == 0:
            logger.debug("Settled %d states, frontier %d, distance %d", visited, len(heap), d)
        for move, successor in neighbors(state, graph, spt, k):
            expanded += 1
            if not alive(successor):
                continue
            candidate = d + move.cost
            known = dist.get(successor)
            if known is None or candidate < known:
                dist[successor] = candidate
                parent[successor] = (state, move)
                heapq.heappush(heap, (candidate, successor))
    else:
        raise InfeasibleError(f"End state unreachable after {visited} states")

    moves: list[Move] = []
    state = end
    while state != start:
        state, move = parent[state]
        moves.append(move)
    moves.reverse()
    logger.info(
        "Token game solved: k=%d cost=%d visited=%d expanded=%d",
        k,
        dist[end],
        visited,
        expanded,
    )
    return GamePlay(
        k=k,
        moves=tuple(moves),
        cost=dist[end],
        visited_states=visited,
        expanded_moves=expanded,
    )

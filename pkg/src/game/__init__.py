"""Token game over the implicit state graph."""

from src.game.token_game import (
    GamePlay,
    Move,
    MoveKind,
    TokenState,
    apply_move,
    neighbors,
    replay,
    solve_token_game,
)

__all__ = [
    "TokenState",
    "MoveKind",
    "Move",
    "GamePlay",
    "neighbors",
    "apply_move",
    "replay",
    "solve_token_game",
]

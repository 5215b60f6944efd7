"""Depth-limited alpha-beta search for two-seat perfect-information games.

The maximizing side is fixed to the seat to move at the root, so games with
extra turns (Kalah) or multi-move turns (Push Fight) keep maximizing until
the rules actually pass the turn. Move ordering is lexicographic on tokens
and ties keep the first strict improvement, which makes the chosen move
identical to plain minimax under the same ordering.
"""

from __future__ import annotations

from ..games.base import GameRules

WIN_SCORE = 10**9


class NodeCounter:
    def __init__(self):
        self.nodes = 0


def _result_value(result, seat: int) -> float:
    outcome = result.seats[seat].outcome
    if outcome == "win":
        return WIN_SCORE
    if outcome == "loss":
        return -WIN_SCORE
    return 0.0


def alphabeta(
    rules: GameRules,
    state,
    depth: int,
    eval_fn,
    seat: int | None = None,
    counter: NodeCounter | None = None,
) -> tuple[float, str | None]:
    """(value, best token) for the seat to move at the root."""
    if seat is None:
        seat = rules.to_move(state)
    return _alphabeta(
        rules, state, depth, eval_fn, seat, -float("inf"), float("inf"), counter
    )


def _alphabeta(rules, state, depth, eval_fn, seat, alpha, beta, counter):
    if counter is not None:
        counter.nodes += 1
    result = rules.terminal(state)
    if result is not None:
        return _result_value(result, seat), None
    if depth == 0:
        return eval_fn(state, seat), None
    mover = rules.to_move(state)
    maximizing = mover == seat
    best_value = -float("inf") if maximizing else float("inf")
    best_token = None
    for token in sorted(rules.legal_moves(state, mover)):
        child, _ = rules.apply(state, mover, token, None)
        value, _ = _alphabeta(
            rules, child, depth - 1, eval_fn, seat, alpha, beta, counter
        )
        if maximizing:
            if value > best_value:
                best_value, best_token = value, token
            alpha = max(alpha, best_value)
        else:
            if value < best_value:
                best_value, best_token = value, token
            beta = min(beta, best_value)
        if beta <= alpha:
            break
    return best_value, best_token

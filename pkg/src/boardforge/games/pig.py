"""Pig: two players race to 100 with a single d6.

Rolling a 1 forfeits the turn total and passes the turn; "hold" banks the
turn total (banking 0 acts as a pass). The win is checked only on hold.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import BadToken
from ..rng import Rng
from .base import GameRules, Result, win_loss

TARGET = 100


@dataclass(frozen=True)
class PigState:
    scores: tuple[int, int]
    turn_total: int
    to_move: int
    winner: int | None = None


class PigRules(GameRules):
    game_id = "pig"
    display_name = "Pig"
    seats_min = 2
    seats_max = 2
    perfect_information = True

    def initial_state(self, seats: int, rng: Rng) -> PigState:
        return PigState(scores=(0, 0), turn_total=0, to_move=0)

    def to_move(self, state: PigState) -> int:
        return state.to_move

    def legal_moves(self, state: PigState, seat: int) -> list[str]:
        if seat != state.to_move or state.winner is not None:
            return []
        return ["hold", "roll"]

    def apply(self, state: PigState, seat: int, token: str, rng: Rng):
        me = state.to_move
        if token == "roll":
            die = rng.roll_die(6)
            events = [{"kind": "dice", "seat": me, "value": die}]
            if die == 1:
                return replace(state, turn_total=0, to_move=1 - me), events
            return replace(state, turn_total=state.turn_total + die), events
        if token == "hold":
            banked = state.scores[me] + state.turn_total
            scores = list(state.scores)
            scores[me] = banked
            events = [{"kind": "bank", "seat": me, "score": banked}]
            if banked >= TARGET:
                return (
                    replace(
                        state,
                        scores=tuple(scores),
                        turn_total=0,
                        winner=me,
                    ),
                    events,
                )
            return (
                PigState(scores=tuple(scores), turn_total=0, to_move=1 - me),
                events,
            )
        raise BadToken(f"pig move must be 'roll' or 'hold', got {token!r}")

    def terminal(self, state: PigState) -> Result | None:
        if state.winner is None:
            return None
        return win_loss(state.winner, 2, list(state.scores))

    def observe(self, state: PigState, viewer: int | None) -> dict:
        return {
            "scores": list(state.scores),
            "turn_total": state.turn_total,
            "to_move": state.to_move,
        }

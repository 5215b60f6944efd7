"""Behavioral contract implemented once per game.

States are immutable values; ``apply`` returns a fresh state plus a list of
public render events. All randomness flows through the supplied Rng so that
replaying a token sequence from the same seed reproduces everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..rng import Rng

# One render event: a dict with a "kind" key plus event-specific fields.
# Events carry only public facts; per-viewer secrets live in observations.
Event = dict


@dataclass(frozen=True)
class SeatResult:
    outcome: str  # "win" | "loss" | "draw"
    score: int | None = None


@dataclass(frozen=True)
class Result:
    """Terminal outcome covering every seat."""

    seats: tuple[SeatResult, ...]

    @property
    def winners(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.seats) if s.outcome == "win")

    def to_wire(self) -> list[dict]:
        return [
            {"seat": i, "outcome": s.outcome}
            | ({"score": s.score} if s.score is not None else {})
            for i, s in enumerate(self.seats)
        ]


def win_loss(winner: int, seats: int, scores: list[int] | None = None) -> Result:
    rows = []
    for i in range(seats):
        rows.append(
            SeatResult(
                "win" if i == winner else "loss",
                scores[i] if scores else None,
            )
        )
    return Result(tuple(rows))


def from_scores(scores: list[int], lower_wins: bool = False) -> Result:
    """Win/draw/loss from per-seat scores; full tie is a draw for everyone."""
    best = min(scores) if lower_wins else max(scores)
    if all(s == best for s in scores):
        return Result(tuple(SeatResult("draw", s) for s in scores))
    return Result(
        tuple(
            SeatResult("win" if s == best else "loss", s) for s in scores
        )
    )


class GameRules:
    """One instance per game; stateless, safe to share."""

    game_id: str = ""
    display_name: str = ""
    seats_min: int = 2
    seats_max: int = 2
    # Perfect-information games attach their raw state to observations so
    # search agents can look ahead; hidden-information games never do.
    perfect_information: bool = True

    def initial_state(self, seats: int, rng: Rng):
        raise NotImplementedError

    def to_move(self, state) -> int:
        raise NotImplementedError

    def legal_moves(self, state, seat: int) -> Sequence[str]:
        """Tokens the seat may submit now; empty when it is not their turn.

        Games with large constant move sets may return a shared immutable
        tuple; callers must not mutate the result.
        """
        raise NotImplementedError

    def apply(self, state, seat: int, token: str, rng: Rng) -> tuple[object, list[Event]]:
        """Advance the state; raises BadToken/IllegalMove on bad input."""
        raise NotImplementedError

    def terminal(self, state) -> Result | None:
        raise NotImplementedError

    def observe(self, state, viewer: int | None) -> dict:
        """Public view for the given seat (None = spectator, least informed)."""
        raise NotImplementedError

    def hidden_decision(self, state) -> bool:
        """True while the pending move is a hidden submission (masked turn)."""
        return False

    def hidden_token(self, state, token: str) -> bool:
        """True if the token about to be applied must be masked in events."""
        return False

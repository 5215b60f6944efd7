"""Kalah(6,4): counterclockwise sowing with captures and extra turns.

Pit layout (south = seat 0): indices 0-5 are south's pits left to right,
6 is south's store, 7-12 are north's pits, 13 is north's store. Tokens are
mover-relative: "pit 1".."pit 6". The board size is parameterizable so that
miniature boards can be solved exhaustively in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from .base import GameRules, Result, from_scores


@dataclass(frozen=True)
class KalahState:
    pits: tuple[int, ...]
    to_move: int
    finished: bool = False


class KalahRules(GameRules):
    game_id = "kalah"
    display_name = "Kalah"
    seats_min = 2
    seats_max = 2
    perfect_information = True

    def __init__(self, pits_per_side: int = 6, seeds_per_pit: int = 4):
        self.n = pits_per_side
        self.seeds = seeds_per_pit

    @property
    def south_store(self) -> int:
        return self.n

    @property
    def north_store(self) -> int:
        return 2 * self.n + 1

    def store_of(self, seat: int) -> int:
        return self.south_store if seat == 0 else self.north_store

    def own_pits(self, seat: int) -> range:
        base = 0 if seat == 0 else self.n + 1
        return range(base, base + self.n)

    def initial_state(self, seats: int, rng: Rng) -> KalahState:
        pits = [self.seeds] * (2 * self.n + 2)
        pits[self.south_store] = 0
        pits[self.north_store] = 0
        return KalahState(pits=tuple(pits), to_move=0)

    def to_move(self, state: KalahState) -> int:
        return state.to_move

    def legal_moves(self, state: KalahState, seat: int) -> list[str]:
        if state.finished or seat != state.to_move:
            return []
        base = 0 if seat == 0 else self.n + 1
        return [
            f"pit {i - base + 1}" for i in self.own_pits(seat) if state.pits[i] > 0
        ]

    def _parse(self, seat: int, token: str) -> int:
        parts = token.split()
        if len(parts) != 2 or parts[0] != "pit" or not parts[1].isdigit():
            raise BadToken(f"expected 'pit N', got {token!r}")
        k = int(parts[1])
        if not 1 <= k <= self.n:
            raise BadToken(f"pit number must be 1-{self.n}, got {k}")
        return (0 if seat == 0 else self.n + 1) + k - 1

    def apply(self, state: KalahState, seat: int, token: str, rng: Rng):
        idx = self._parse(seat, token)
        pits = list(state.pits)
        seeds = pits[idx]
        if seeds == 0:
            raise IllegalMove(f"{token} is empty")
        pits[idx] = 0
        own_store = self.store_of(seat)
        opp_store = self.store_of(1 - seat)
        pos = idx
        while seeds:
            pos = (pos + 1) % len(pits)
            if pos == opp_store:
                continue
            pits[pos] += 1
            seeds -= 1
        events: list[dict] = [{"kind": "sow", "seat": seat, "last": pos}]
        extra_turn = pos == own_store
        own_range = self.own_pits(seat)
        if (
            not extra_turn
            and pos in own_range
            and pits[pos] == 1
            and pits[2 * self.n - pos] > 0
        ):
            captured = pits[pos] + pits[2 * self.n - pos]
            pits[own_store] += captured
            pits[pos] = 0
            pits[2 * self.n - pos] = 0
            events.append({"kind": "capture", "seat": seat, "seeds": captured})
        # If either side is out of seeds, the other side sweeps and play ends.
        south_empty = all(pits[i] == 0 for i in self.own_pits(0))
        north_empty = all(pits[i] == 0 for i in self.own_pits(1))
        finished = south_empty or north_empty
        if finished:
            for side in (0, 1):
                rest = sum(pits[i] for i in self.own_pits(side))
                if rest:
                    pits[self.store_of(side)] += rest
                    for i in self.own_pits(side):
                        pits[i] = 0
                    events.append({"kind": "sweep", "seat": side, "seeds": rest})
        elif extra_turn:
            events.append({"kind": "extra_turn", "seat": seat})
        next_seat = seat if extra_turn else 1 - seat
        new = KalahState(pits=tuple(pits), to_move=next_seat, finished=finished)
        return new, events

    def terminal(self, state: KalahState) -> Result | None:
        if not state.finished:
            return None
        scores = [state.pits[self.south_store], state.pits[self.north_store]]
        return from_scores(scores)

    def observe(self, state: KalahState, viewer: int | None) -> dict:
        return {
            "pits": list(state.pits),
            "pits_per_side": self.n,
            "stores": [state.pits[self.south_store], state.pits[self.north_store]],
            "to_move": state.to_move,
        }

"""Othello on the standard 8x8 board; seat 0 is Black and moves first.

Boards are a pair of 64-bit masks (bit i = row*8+col, row 0 at top). Flips
for a single placement are resolved by ray scans; the full set of legal
placements uses directional shift fills. The two routes are independent and
cross-checked in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from . import grid
from .base import GameRules, Result, from_scores

FULL = (1 << 64) - 1
_COL_A = sum(1 << (r * 8) for r in range(8))
_COL_H = _COL_A << 7

# Outward ray cell indices for every cell and direction.
_RAYS: list[list[tuple[int, ...]]] = []
for _r in range(8):
    for _c in range(8):
        rays = []
        for dr, dc in grid.ALL_DIRS:
            ray = []
            rr, cc = _r + dr, _c + dc
            while 0 <= rr < 8 and 0 <= cc < 8:
                ray.append(rr * 8 + cc)
                rr += dr
                cc += dc
            rays.append(tuple(ray))
        _RAYS.append(rays)

CELL_NAMES = [grid.cell_name(i // 8, i % 8) for i in range(64)]


def resolve_flips(own: int, opp: int, cell: int) -> int:
    """Mask of opponent discs flipped by playing `cell`; 0 means illegal."""
    flips = 0
    for ray in _RAYS[cell]:
        run = 0
        for idx in ray:
            bit = 1 << idx
            if opp & bit:
                run |= bit
            elif own & bit:
                flips |= run
                break
            else:
                break
    return flips


def _shift(x: int, d: int) -> int:
    if d == 1:
        return (x << 1) & ~_COL_A & FULL
    if d == -1:
        return (x >> 1) & ~_COL_H
    if d == 8:
        return (x << 8) & FULL
    if d == -8:
        return x >> 8
    if d == 9:
        return (x << 9) & ~_COL_A & FULL
    if d == 7:
        return (x << 7) & ~_COL_H & FULL
    if d == -7:
        return (x >> 7) & ~_COL_A
    return (x >> 9) & ~_COL_H


def mover_mask(own: int, opp: int) -> int:
    """All legal placement cells for the side `own`, via directional fills."""
    empty = ~(own | opp) & FULL
    moves = 0
    for d in (1, -1, 8, -8, 9, 7, -7, -9):
        t = _shift(own, d) & opp
        for _ in range(5):
            t |= _shift(t, d) & opp
        moves |= _shift(t, d) & empty
    return moves


@dataclass(frozen=True)
class OthelloState:
    black: int
    white: int
    to_move: int  # 0 = Black
    passes: int = 0


def initial_board() -> tuple[int, int]:
    # d4/e5 White, d5/e4 Black.
    white = (1 << 27) | (1 << 36)
    black = (1 << 35) | (1 << 28)
    return black, white


class OthelloRules(GameRules):
    game_id = "othello"
    display_name = "Othello"
    seats_min = 2
    seats_max = 2
    perfect_information = True

    def initial_state(self, seats: int, rng: Rng) -> OthelloState:
        black, white = initial_board()
        return OthelloState(black=black, white=white, to_move=0)

    def to_move(self, state: OthelloState) -> int:
        return state.to_move

    def _sides(self, state: OthelloState, seat: int) -> tuple[int, int]:
        return (state.black, state.white) if seat == 0 else (state.white, state.black)

    def legal_moves(self, state: OthelloState, seat: int) -> list[str]:
        if seat != state.to_move or self.terminal(state) is not None:
            return []
        own, opp = self._sides(state, seat)
        mask = mover_mask(own, opp)
        if mask == 0:
            return ["pass"]
        return [CELL_NAMES[i] for i in range(64) if mask & (1 << i)]

    def apply(self, state: OthelloState, seat: int, token: str, rng: Rng):
        own, opp = self._sides(state, seat)
        if token == "pass":
            if mover_mask(own, opp):
                raise IllegalMove("pass is only legal with no placement available")
            new = OthelloState(
                black=state.black,
                white=state.white,
                to_move=1 - seat,
                passes=state.passes + 1,
            )
            return new, [{"kind": "pass", "seat": seat}]
        r, c = grid.parse_cell(token)
        cell = r * 8 + c
        bit = 1 << cell
        if (own | opp) & bit:
            raise IllegalMove(f"{token} is occupied")
        flips = resolve_flips(own, opp, cell)
        if flips == 0:
            raise IllegalMove(f"{token} flips nothing")
        own |= flips | bit
        opp &= ~flips
        black, white = (own, opp) if seat == 0 else (opp, own)
        new = OthelloState(black=black, white=white, to_move=1 - seat, passes=0)
        events = [
            {"kind": "place", "seat": seat, "cell": token},
            {
                "kind": "flips",
                "cells": [CELL_NAMES[i] for i in range(64) if flips & (1 << i)],
            },
        ]
        return new, events

    def terminal(self, state: OthelloState) -> Result | None:
        if state.passes < 2 and (state.black | state.white) != FULL:
            return None
        return from_scores([state.black.bit_count(), state.white.bit_count()])

    def observe(self, state: OthelloState, viewer: int | None) -> dict:
        rows = []
        for r in range(8):
            row = []
            for c in range(8):
                bit = 1 << (r * 8 + c)
                row.append("B" if state.black & bit else "W" if state.white & bit else ".")
            rows.append("".join(row))
        return {
            "board": rows,
            "to_move": state.to_move,
            "discs": [state.black.bit_count(), state.white.bit_count()],
        }

"""Black Box: locate 4 hidden atoms on an 8x8 grid by firing rays.

Ports 1-8 run down the left side (rays travel east), 9-16 along the bottom
(north), 17-24 up the right side (west), 25-32 along the top right-to-left
(south). Atoms are always drawn from the match rng; with two seats the
players seek on alternating rounds and the lower total score wins.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from . import grid
from .base import GameRules, Result, SeatResult, from_scores

SIZE = 8
NUM_ATOMS = 4
NUM_PORTS = 4 * SIZE

Cell = tuple[int, int]

CELL_NAMES = [grid.cell_name(i // SIZE, i % SIZE) for i in range(SIZE * SIZE)]


def port_entry(port: int) -> tuple[Cell, Cell]:
    """(threshold position just outside the grid, travel direction)."""
    if 1 <= port <= 8:
        return (port - 1, -1), (0, 1)
    if 9 <= port <= 16:
        return (SIZE, port - 9), (-1, 0)
    if 17 <= port <= 24:
        return (24 - port, SIZE), (0, -1)
    if 25 <= port <= 32:
        return (-1, 32 - port), (1, 0)
    raise BadToken(f"port must be 1-{NUM_PORTS}, got {port}")


def _exit_port(pos: Cell, d: Cell) -> int | None:
    r, c = pos
    if d == (0, -1) and c == -1 and 0 <= r < SIZE:
        return r + 1
    if d == (-1, 0) and r == -1 and 0 <= c < SIZE:
        return 32 - c
    if d == (0, 1) and c == SIZE and 0 <= r < SIZE:
        return 24 - r
    if d == (1, 0) and r == SIZE and 0 <= c < SIZE:
        return 9 + c
    return None  # margin escape: only possible by deflection at the threshold


def trace(atoms: frozenset[Cell] | set[Cell], port: int) -> tuple[str, int | None]:
    """Fire a ray: ("hit", None), ("reflect", None), or ("exit", port)."""
    pos, d = port_entry(port)
    for _ in range(10_000):
        f = (pos[0] + d[0], pos[1] + d[1])
        if f in atoms:
            return "hit", None
        fl = (f[0] - d[1], f[1] + d[0])
        fr = (f[0] + d[1], f[1] - d[0])
        near_l, near_r = fl in atoms, fr in atoms
        if near_l and near_r:
            d = (-d[0], -d[1])
        elif near_l:
            d = (d[1], -d[0])  # away from the left atom: turn right
        elif near_r:
            d = (-d[1], d[0])  # turn left
        pos = (pos[0] + d[0], pos[1] + d[1])
        if not (0 <= pos[0] < SIZE and 0 <= pos[1] < SIZE):
            out = _exit_port(pos, d)
            if out is None or out == port:
                return "reflect", None
            return "exit", out
    raise AssertionError("ray did not terminate (tracer bug)")


def shot_cost(result: str) -> int:
    # An exit marks two ports (entry + exit); hit and reflect mark one.
    return 2 if result == "exit" else 1


def round_score(shots: list[tuple[int, str, int | None]], guess: frozenset[Cell], atoms: frozenset[Cell]) -> int:
    cost = sum(shot_cost(result) for _, result, _ in shots)
    return cost + 5 * len(guess - atoms)


def _draw_atoms(rng: Rng) -> frozenset[Cell]:
    picks = rng.sample_distinct(SIZE * SIZE, NUM_ATOMS)
    return frozenset((i // SIZE, i % SIZE) for i in picks)


def _guess_tokens() -> tuple[str, ...]:
    return tuple(
        "guess " + " ".join(CELL_NAMES[i] for i in combo)
        for combo in combinations(range(SIZE * SIZE), NUM_ATOMS)
    )


_GUESS_CACHE: tuple[str, ...] | None = None
_ALL_MOVES: tuple[str, ...] | None = None


def guess_tokens() -> tuple[str, ...]:
    global _GUESS_CACHE
    if _GUESS_CACHE is None:
        _GUESS_CACHE = _guess_tokens()
    return _GUESS_CACHE


def all_move_tokens() -> tuple[str, ...]:
    """Rays then guesses; shared tuple, built once."""
    global _ALL_MOVES
    if _ALL_MOVES is None:
        rays = tuple(f"ray {p}" for p in range(1, NUM_PORTS + 1))
        _ALL_MOVES = rays + guess_tokens()
    return _ALL_MOVES


@dataclass(frozen=True)
class BlackBoxState:
    seats: int
    atoms: frozenset[Cell]
    shots: tuple[tuple[int, str, int | None], ...]  # (port, result, exit port)
    phase: str  # "shooting" | "done"
    seeker: int
    final_guess: frozenset[Cell] | None
    scores: tuple[int | None, ...]
    # Finished rounds, kept for observation: (seeker, atoms, guess, score).
    revealed: tuple[tuple[int, frozenset[Cell], frozenset[Cell], int], ...] = ()


class BlackBoxRules(GameRules):
    game_id = "blackbox"
    display_name = "Black Box"
    seats_min = 1
    seats_max = 2
    perfect_information = False

    def initial_state(self, seats: int, rng: Rng) -> BlackBoxState:
        return BlackBoxState(
            seats=seats,
            atoms=_draw_atoms(rng),
            shots=(),
            phase="shooting",
            seeker=0,
            final_guess=None,
            scores=tuple(None for _ in range(seats)),
        )

    def to_move(self, state: BlackBoxState) -> int:
        return state.seeker

    def legal_moves(self, state: BlackBoxState, seat: int):
        if state.phase == "done" or seat != state.seeker:
            return ()
        return all_move_tokens()

    def _parse_guess(self, parts: list[str]) -> frozenset[Cell]:
        if len(parts) != NUM_ATOMS:
            raise BadToken(f"guess needs {NUM_ATOMS} cells, got {len(parts)}")
        cells = [grid.parse_cell(p) for p in parts]
        idx = [r * SIZE + c for r, c in cells]
        if sorted(set(idx)) != idx:
            raise BadToken("guess cells must be distinct and in board order")
        return frozenset(cells)

    def apply(self, state: BlackBoxState, seat: int, token: str, rng: Rng):
        if state.phase == "done":
            raise IllegalMove("round is over")
        parts = token.split()
        if parts[0] == "ray" and len(parts) == 2:
            if not parts[1].isdigit():
                raise BadToken(f"ray wants a port number, got {parts[1]!r}")
            port = int(parts[1])
            result, out = trace(state.atoms, port)  # validates the port
            shots = state.shots + ((port, result, out),)
            event = {"kind": "shot", "seat": seat, "port": port, "result": result}
            if out is not None:
                event["port_out"] = out
            return replace(state, shots=shots), [event]
        if parts[0] == "guess":
            guess = self._parse_guess(parts[1:])
            score = round_score(list(state.shots), guess, state.atoms)
            scores = list(state.scores)
            scores[seat] = score
            revealed = state.revealed + ((seat, state.atoms, guess, score),)
            events = [
                {
                    "kind": "reveal",
                    "seat": seat,
                    "atoms": sorted(CELL_NAMES[r * SIZE + c] for r, c in state.atoms),
                    "correct": len(guess & state.atoms),
                    "score": score,
                }
            ]
            if seat + 1 < state.seats:
                # Next round: fresh atoms, the other seat seeks.
                new = BlackBoxState(
                    seats=state.seats,
                    atoms=_draw_atoms(rng),
                    shots=(),
                    phase="shooting",
                    seeker=seat + 1,
                    final_guess=None,
                    scores=tuple(scores),
                    revealed=revealed,
                )
                events.append({"kind": "new_round", "seeker": seat + 1})
                return new, events
            new = replace(
                state,
                phase="done",
                final_guess=guess,
                scores=tuple(scores),
                revealed=revealed,
            )
            return new, events
        raise BadToken(f"expected 'ray N' or 'guess c1 c2 c3 c4', got {token!r}")

    def terminal(self, state: BlackBoxState) -> Result | None:
        if state.phase != "done":
            return None
        scores = [s for s in state.scores]
        if state.seats == 1:
            perfect = state.final_guess == state.atoms
            return Result((SeatResult("win" if perfect else "loss", scores[0]),))
        return from_scores(scores, lower_wins=True)

    def observe(self, state: BlackBoxState, viewer: int | None) -> dict:
        view = {
            "seeker": state.seeker,
            "shots": [
                {"port": p, "result": res}
                | ({"port_out": out} if out is not None else {})
                for p, res, out in state.shots
            ],
            "rounds": [
                {
                    "seeker": seeker,
                    "atoms": sorted(CELL_NAMES[r * SIZE + c] for r, c in atoms),
                    "guess": sorted(CELL_NAMES[r * SIZE + c] for r, c in guess),
                    "score": score,
                }
                for seeker, atoms, guess, score in state.revealed
            ],
            "scores": list(state.scores),
        }
        return view

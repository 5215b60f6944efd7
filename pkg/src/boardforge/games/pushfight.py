"""Push Fight on the repo's canonical 22-cell mask.

Each side fields 3 squares and 2 rounds. A turn is up to two slides (moves
through connected empty cells) and exactly one push by a square. The board's
top and bottom perimeter edges are rails; left/right exits are open, and a
piece pushed across an open edge loses the game for its owner. The last
pusher carries the anchor and cannot be pushed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from . import grid
from .base import GameRules, Result, win_loss

ROWS = 4
COLS = 8
_ROW_COLS = {0: (2, 5), 1: (1, 7), 2: (0, 6), 3: (2, 5)}
MASK: frozenset[tuple[int, int]] = frozenset(
    (r, c) for r, (lo, hi) in _ROW_COLS.items() for c in range(lo, hi + 1)
)

SQUARES_PER_SIDE = 3
ROUNDS_PER_SIDE = 2

Cell = tuple[int, int]
Piece = tuple[int, str]  # (owner seat, "s" | "r")

PLACEMENT = "placement"
PLAY = "play"


def cell_token(cell: Cell) -> str:
    return grid.cell_name(*cell)


def parse_board_cell(text: str) -> Cell:
    cell = grid.parse_cell(text, rows=ROWS, cols=COLS)
    if cell not in MASK:
        raise BadToken(f"{text!r} is off the board")
    return cell


def slide_targets(board: dict[Cell, Piece], cell: Cell) -> set[Cell]:
    """Cells reachable through orthogonally connected empty cells."""
    seen: set[Cell] = set()
    frontier = [cell]
    while frontier:
        r, c = frontier.pop()
        for dr, dc in grid.ORTHO_DIRS:
            nxt = (r + dr, c + dc)
            if nxt in MASK and nxt not in board and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


@dataclass(frozen=True)
class PushFightState:
    board: dict[Cell, Piece]
    phase: str
    to_move: int
    moves_left: int
    anchor: Cell | None
    placed: tuple[int, int]  # pieces placed so far per seat
    loser: int | None = None


class PushFightRules(GameRules):
    game_id = "pushfight"
    display_name = "Push Fight"
    seats_min = 2
    seats_max = 2
    perfect_information = True

    def initial_state(self, seats: int, rng: Rng) -> PushFightState:
        return PushFightState(
            board={},
            phase=PLACEMENT,
            to_move=0,
            moves_left=0,
            anchor=None,
            placed=(0, 0),
        )

    def to_move(self, state: PushFightState) -> int:
        return state.to_move

    def _half_cols(self, seat: int) -> range:
        return range(0, 4) if seat == 0 else range(4, 8)

    def _remaining(self, state: PushFightState, seat: int) -> tuple[int, int]:
        squares = sum(
            1 for p in state.board.values() if p == (seat, "s")
        )
        rounds = sum(1 for p in state.board.values() if p == (seat, "r"))
        return SQUARES_PER_SIDE - squares, ROUNDS_PER_SIDE - rounds

    def _push_line(
        self, state: PushFightState, pusher: Cell, d: Cell
    ) -> tuple[list[Cell], Cell | None]:
        """Line of pushed cells and the far target (None = falls off).

        Raises IllegalMove when the push is blocked.
        """
        piece = state.board.get(pusher)
        if piece is None or piece[0] != state.to_move:
            raise IllegalMove(f"{cell_token(pusher)} is not your piece")
        if piece[1] != "s":
            raise IllegalMove("only squares push")
        line = [pusher]
        cur = (pusher[0] + d[0], pusher[1] + d[1])
        if state.board.get(cur) is None:
            raise IllegalMove("nothing to push")
        while cur in state.board:
            line.append(cur)
            cur = (cur[0] + d[0], cur[1] + d[1])
        if state.anchor is not None and state.anchor in line:
            raise IllegalMove("the anchored piece cannot be pushed")
        if cur in MASK:
            return line, cur
        # Off-mask: vertical exits hit the rails, horizontal exits are open.
        if d[1] == 0:
            raise IllegalMove("push is blocked by the rail")
        return line, None

    def _pushes(self, state: PushFightState, seat: int) -> list[str]:
        out = []
        for cell, piece in state.board.items():
            if piece != (seat, "s"):
                continue
            for name, d in grid.DIRECTIONS.items():
                try:
                    self._push_line(state, cell, d)
                except IllegalMove:
                    continue
                out.append(f"push {cell_token(cell)} {name}")
        return sorted(out)

    def legal_moves(self, state: PushFightState, seat: int) -> list[str]:
        if state.loser is not None or seat != state.to_move:
            return []
        if state.phase == PLACEMENT:
            squares_left, rounds_left = self._remaining(state, seat)
            shapes = ("s",) * (squares_left > 0) + ("r",) * (rounds_left > 0)
            cells = [
                (r, c)
                for (r, c) in sorted(MASK)
                if c in self._half_cols(seat) and (r, c) not in state.board
            ]
            return [f"place {s} {cell_token(cell)}" for s in shapes for cell in cells]
        moves: list[str] = []
        if state.moves_left > 0:
            moves.append("skip")
            for cell, piece in state.board.items():
                if piece[0] != seat:
                    continue
                for target in slide_targets(state.board, cell):
                    moves.append(f"move {cell_token(cell)} {cell_token(target)}")
        moves.extend(self._pushes(state, seat))
        return sorted(moves)

    def apply(self, state: PushFightState, seat: int, token: str, rng: Rng):
        parts = token.split()
        if state.phase == PLACEMENT:
            return self._apply_placement(state, seat, parts, token)
        if parts[0] == "skip" and len(parts) == 1:
            if state.moves_left == 0:
                raise IllegalMove("no slides left to skip; you must push")
            return replace(state, moves_left=0), [{"kind": "skip", "seat": seat}]
        if parts[0] == "move" and len(parts) == 3:
            if state.moves_left == 0:
                raise IllegalMove("both slides used; you must push")
            src = parse_board_cell(parts[1])
            dst = parse_board_cell(parts[2])
            piece = state.board.get(src)
            if piece is None or piece[0] != seat:
                raise IllegalMove(f"{parts[1]} is not your piece")
            if dst not in slide_targets(state.board, src):
                raise IllegalMove(f"{parts[2]} is not reachable")
            board = dict(state.board)
            del board[src]
            board[dst] = piece
            new = replace(state, board=board, moves_left=state.moves_left - 1)
            return new, [{"kind": "slide", "seat": seat, "from": parts[1], "to": parts[2]}]
        if parts[0] == "push" and len(parts) == 3:
            if parts[2] not in grid.DIRECTIONS:
                raise BadToken(f"bad direction {parts[2]!r}")
            pusher = parse_board_cell(parts[1])
            d = grid.DIRECTIONS[parts[2]]
            line, target = self._push_line(state, pusher, d)
            board = dict(state.board)
            events: list[dict] = [
                {"kind": "push", "seat": seat, "cell": parts[1], "dir": parts[2]}
            ]
            loser = None
            if target is None:
                fallen_cell = line[-1]
                fallen = board.pop(fallen_cell)
                loser = fallen[0]
                events.append(
                    {"kind": "fell", "cell": cell_token(fallen_cell), "seat": loser}
                )
                line = line[:-1]
            # Shift the remaining line one step, far piece first.
            for cell in reversed(line):
                board[(cell[0] + d[0], cell[1] + d[1])] = board.pop(cell)
            new_anchor = (pusher[0] + d[0], pusher[1] + d[1])
            events.append({"kind": "anchor", "cell": cell_token(new_anchor)})
            new = PushFightState(
                board=board,
                phase=PLAY,
                to_move=1 - seat,
                moves_left=2,
                anchor=new_anchor,
                placed=state.placed,
                loser=loser,
            )
            return new, events
        raise BadToken(f"unrecognized push fight move {token!r}")

    def _apply_placement(self, state, seat, parts, token):
        if len(parts) != 3 or parts[0] != "place" or parts[1] not in ("s", "r"):
            raise BadToken(f"expected 'place s|r CELL', got {token!r}")
        cell = parse_board_cell(parts[2])
        if cell[1] not in self._half_cols(seat):
            raise IllegalMove(f"{parts[2]} is outside your placement half")
        if cell in state.board:
            raise IllegalMove(f"{parts[2]} is occupied")
        squares_left, rounds_left = self._remaining(state, seat)
        if parts[1] == "s" and squares_left == 0:
            raise IllegalMove("all squares placed")
        if parts[1] == "r" and rounds_left == 0:
            raise IllegalMove("all rounds placed")
        board = dict(state.board)
        board[cell] = (seat, parts[1])
        placed = list(state.placed)
        placed[seat] += 1
        if placed[0] == 5 and placed[1] == 5:
            new = PushFightState(
                board=board,
                phase=PLAY,
                to_move=0,
                moves_left=2,
                anchor=None,
                placed=(5, 5),
            )
        else:
            to_move = 0 if placed[0] < 5 else 1
            new = replace(
                state, board=board, to_move=to_move, placed=tuple(placed)
            )
        event = {"kind": "place", "seat": seat, "shape": parts[1], "cell": parts[2]}
        return new, [event]

    def terminal(self, state: PushFightState) -> Result | None:
        if state.loser is not None:
            return win_loss(1 - state.loser, 2)
        # While slides remain, "skip" keeps the move list nonempty; once they
        # are spent the mover loses unless a push exists.
        if (
            state.phase == PLAY
            and state.moves_left == 0
            and not self._pushes(state, state.to_move)
        ):
            return win_loss(1 - state.to_move, 2)
        return None

    def observe(self, state: PushFightState, viewer: int | None) -> dict:
        return {
            "phase": state.phase,
            "board": {
                cell_token(cell): {"seat": piece[0], "shape": piece[1]}
                for cell, piece in sorted(state.board.items())
            },
            "anchor": cell_token(state.anchor) if state.anchor else None,
            "moves_left": state.moves_left,
            "to_move": state.to_move,
            "to_place": [5 - state.placed[0], 5 - state.placed[1]],
        }

"""Shared cell naming for grid games: columns a.., rows 1.. (row 0 at top)."""

from __future__ import annotations

from ..errors import BadToken

COLUMNS = "abcdefgh"

# (dr, dc) steps; names used by the push grammar.
DIRECTIONS = {
    "up": (-1, 0),
    "down": (1, 0),
    "left": (0, -1),
    "right": (0, 1),
}

ALL_DIRS = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]
ORTHO_DIRS = [(-1, 0), (1, 0), (0, -1), (0, 1)]


def cell_name(r: int, c: int) -> str:
    return f"{COLUMNS[c]}{r + 1}"


def parse_cell(text: str, rows: int = 8, cols: int = 8) -> tuple[int, int]:
    """Parse a name like "d5" into (row, col); raises BadToken out of range."""
    text = text.strip().lower()
    if len(text) < 2 or not text[1:].isdigit():
        raise BadToken(f"bad cell {text!r}")
    c = COLUMNS.find(text[0])
    r = int(text[1:]) - 1
    if c < 0 or c >= cols or r < 0 or r >= rows:
        raise BadToken(f"cell {text!r} out of range")
    return r, c

"""Deterministic line renderings of observations for the text interface.

Output is stable across runs for a given observation so that scripted
sessions produce byte-identical transcripts.
"""

from __future__ import annotations

from .engine import Observation

SEAT_LETTERS = "abcdefgh"


def render_text(obs: Observation) -> str:
    view = obs.public_view
    lines = _RENDERERS[obs.game_id](view)
    if obs.status == "finished" and obs.result is not None:
        parts = []
        for i, seat in enumerate(obs.result.seats):
            note = f" ({seat.score})" if seat.score is not None else ""
            parts.append(f"seat {i}: {seat.outcome}{note}")
        lines.append("result: " + ", ".join(parts))
    elif obs.turn is not None:
        lines.append(f"to move: seat {obs.turn}")
    return "\n".join(lines)


def _render_pig(view: dict) -> list[str]:
    scores = view["scores"]
    return [
        f"scores: seat 0 = {scores[0]}, seat 1 = {scores[1]}",
        f"turn total: {view['turn_total']}",
    ]


def _render_mastermind(view: dict) -> list[str]:
    lines = [f"phase: {view['phase']}  guesses left: {view['guesses_left']}"]
    if "secret" in view:
        lines.append(f"secret: {view['secret']}")
    for i, row in enumerate(view["guesses"], 1):
        lines.append(
            f"{i:2d}. {row['guess']}  black {row['black']}  white {row['white']}"
        )
    return lines


def _render_kalah(view: dict) -> list[str]:
    n = view["pits_per_side"]
    pits = view["pits"]
    north = " ".join(str(pits[2 * n - i]) for i in range(n))  # north pits, reversed
    south = " ".join(str(pits[i]) for i in range(n))
    return [
        f"north: {north}  (store {view['stores'][1]})",
        f"south: {south}  (store {view['stores'][0]})",
    ]


def _render_nothanks(view: dict) -> list[str]:
    card = view["face_up"] if view["face_up"] is not None else "-"
    lines = [
        f"face up: {card}  pot: {view['pot']}  deck: {view['deck_remaining']} cards left",
    ]
    for i, (hand, chips) in enumerate(zip(view["hands"], view["chips"])):
        cards = " ".join(str(c) for c in hand) if hand else "-"
        lines.append(f"seat {i}: chips {chips:2d}  cards: {cards}")
    return lines


def _render_othello(view: dict) -> list[str]:
    lines = ["  a b c d e f g h"]
    for r, row in enumerate(view["board"], 1):
        lines.append(f"{r} " + " ".join(row))
    discs = view["discs"]
    lines.append(f"discs: B={discs[0]} W={discs[1]}")
    return lines


def _render_blackbox(view: dict) -> list[str]:
    lines = ["     " + " ".join(f"{32 - c:2d}" for c in range(8))]
    grid = [["." for _ in range(8)] for _ in range(8)]
    for r in range(8):
        lines.append(f"{r + 1:2d} | " + "  ".join(grid[r]) + f" | {24 - r}")
    lines.append("     " + " ".join(f"{9 + c:2d}" for c in range(8)))
    shots = view["shots"]
    if shots:
        rendered = []
        for shot in shots:
            out = f"->{shot['port_out']}" if "port_out" in shot else ""
            rendered.append(f"{shot['port']}:{shot['result']}{out}")
        lines.append("shots: " + " ".join(rendered))
    for round_ in view["rounds"]:
        lines.append(
            f"round (seat {round_['seeker']}): atoms {' '.join(round_['atoms'])}"
            f"  guess {' '.join(round_['guess'])}  score {round_['score']}"
        )
    return lines


def _render_pushfight(view: dict) -> list[str]:
    from .games.pushfight import MASK

    board = view["board"]
    anchor = view["anchor"]
    lines = ["  a b c d e f g h"]
    for r in range(4):
        cells = []
        for c in range(8):
            if (r, c) not in MASK:
                cells.append(" ")
                continue
            name = f"{SEAT_LETTERS[c]}{r + 1}"
            piece = board.get(name)
            if piece is None:
                cells.append(".")
            else:
                glyph = "S" if piece["shape"] == "s" else "O"
                if piece["seat"] == 1:
                    glyph = glyph.lower()
                cells.append(glyph)
        lines.append(f"{r + 1} " + " ".join(cells))
    lines.append(f"phase: {view['phase']}  slides left: {view['moves_left']}")
    if anchor:
        lines.append(f"anchor: {anchor}")
    return lines


_RENDERERS = {
    "pig": _render_pig,
    "mastermind": _render_mastermind,
    "kalah": _render_kalah,
    "nothanks": _render_nothanks,
    "othello": _render_othello,
    "blackbox": _render_blackbox,
    "pushfight": _render_pushfight,
}

"""Shared fuzz machinery: seeded playout policies and replay verification."""

from __future__ import annotations

import random

from boardforge.engine import Match, create_match, load


class FixedDice:
    """Rng stand-in that feeds scripted values to a game's apply()."""

    def __init__(self, rolls=(), belows=()):
        self.rolls = list(rolls)
        self.belows = list(belows)

    def roll_die(self, sides=6):
        return self.rolls.pop(0)

    def below(self, n):
        return self.belows.pop(0)


def playout_token(match: Match, pick: random.Random) -> str:
    """Next token for a fuzz playout; always a member of legal_moves."""
    seat = match.to_move()
    legal = match.legal_moves(seat)
    game = match.game_id
    if game == "pig":
        # Hold-at-20 keeps playouts short and guarantees progress.
        tt = match.state.turn_total
        score = match.state.scores[seat]
        return "hold" if (tt >= 20 or score + tt >= 100) else "roll"
    if game == "blackbox" and len(legal) > 64:
        # Uniform choice would nearly always guess; keep rays in the mix.
        if pick.random() < 0.7:
            return legal[pick.randrange(32)]
        return legal[pick.randrange(32, len(legal))]
    return legal[pick.randrange(len(legal))]


def run_playout(game_id: str, seats: list[str], seed: int, pick: random.Random,
                max_plies: int = 10_000) -> tuple[Match, list]:
    """Play a full random game; returns the match and per-ply state snapshots."""
    match = create_match(game_id, seats, seed)
    snapshots = []
    for _ in range(max_plies):
        if match.status == "finished":
            break
        token = playout_token(match, pick)
        match.submit(match.to_move(), token)
        snapshots.append((match.state, match.rng.state, match.status))
    assert match.status == "finished", f"{game_id} playout did not terminate"
    return match, snapshots


def check_replay_identity(match: Match, snapshots: list) -> None:
    """Replay the finished match's record and compare at every ply.

    Replay is deterministic, so the replayed state at ply t equals what
    load(save(match-at-ply-t)) would produce; checking every intermediate
    ply of one full replay covers per-ply reloads in O(moves).
    """
    record = match.save()
    twin = create_match(record.game_id, list(record.seat_names), record.seed)
    for t, token in enumerate(record.moves):
        twin.submit(twin.to_move(), token)
        state, rng_state, status = snapshots[t]
        assert twin.state == state, f"state diverged at ply {t}"
        assert twin.rng.state == rng_state, f"rng diverged at ply {t}"
        assert twin.status == status
    assert twin.result == match.result


def check_one_midgame_reload(match: Match, pick: random.Random) -> None:
    """Spot-check a true save -> load round trip at one random ply."""
    if not match.history:
        return
    cut = pick.randrange(1, len(match.history) + 1)
    record = match.save()
    partial = type(record)(
        game_id=record.game_id,
        seat_names=record.seat_names,
        seed=record.seed,
        moves=record.moves[:cut],
    )
    reloaded = load(partial)
    assert list(reloaded.history) == list(record.moves[:cut])


DEFAULT_SEATS = {
    "pig": ["A", "B"],
    "mastermind": ["Maker", "Breaker"],
    "kalah": ["South", "North"],
    "nothanks": ["A", "B", "C"],
    "othello": ["Black", "White"],
    "blackbox": ["Seeker", "Rival"],
    "pushfight": ["A", "B"],
}

"""Game-agnostic match lifecycle: moves, termination, reset, save/load.

Saves are replay-based: a record stores the seed and the token history, and
loading re-applies the tokens to a fresh match. That keeps records small,
portable across implementations, and usable directly as test fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    BadSeatCount,
    BadToken,
    BoardForgeError,
    MatchFinished,
    NotYourTurn,
    RecordError,
    ReplayFailure,
)
from .games import get_rules
from .games.base import Event, GameRules, Result
from .rng import Rng

RECORD_FORMAT_VERSION = 1
_RECORD_KEYS = {"format_version", "game_id", "seat_names", "seed", "moves"}


def canonical_token(raw: str) -> str:
    """Lowercase, single-space form; the grammar is case-insensitive."""
    token = " ".join(raw.lower().split())
    if not token:
        raise BadToken("empty move token")
    return token


@dataclass(frozen=True)
class MatchRecord:
    """Self-contained save document: seed plus move tokens."""

    game_id: str
    seat_names: tuple[str, ...]
    seed: int
    moves: tuple[str, ...]
    format_version: int = RECORD_FORMAT_VERSION

    def to_json(self) -> str:
        # Seed travels as a decimal string: 64-bit values do not survive
        # every JSON reader as numbers.
        doc = {
            "format_version": self.format_version,
            "game_id": self.game_id,
            "seat_names": list(self.seat_names),
            "seed": str(self.seed),
            "moves": list(self.moves),
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "MatchRecord":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RecordError(f"record is not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise RecordError("record must be a JSON object")
        if set(doc) != _RECORD_KEYS:
            extra = set(doc) - _RECORD_KEYS
            missing = _RECORD_KEYS - set(doc)
            raise RecordError(f"bad record keys (extra={sorted(extra)}, missing={sorted(missing)})")
        if doc["format_version"] != RECORD_FORMAT_VERSION:
            raise RecordError(f"unsupported format_version {doc['format_version']!r}")
        if not isinstance(doc["game_id"], str):
            raise RecordError("game_id must be a string")
        seats = doc["seat_names"]
        if not isinstance(seats, list) or not all(isinstance(s, str) for s in seats):
            raise RecordError("seat_names must be a list of strings")
        if not isinstance(doc["seed"], str) or not doc["seed"].isdigit():
            raise RecordError("seed must be a decimal string")
        moves = doc["moves"]
        if not isinstance(moves, list) or not all(isinstance(m, str) for m in moves):
            raise RecordError("moves must be a list of strings")
        return cls(
            game_id=doc["game_id"],
            seat_names=tuple(seats),
            seed=int(doc["seed"]),
            moves=tuple(moves),
        )


@dataclass
class Observation:
    """Per-viewer projection of a match: no other seat's secrets, ever."""

    viewer: int | None
    game_id: str
    turn: int | None
    public_view: dict
    legal_moves: "Sequence[str]"
    status: str
    result: Result | None = None
    # Raw state, attached only for perfect-information games so that search
    # agents can look ahead. Never serialized.
    state: object = None

    def to_wire(self) -> dict:
        msg = {
            "viewer": self.viewer,
            "game_id": self.game_id,
            "turn": self.turn,
            "public_view": self.public_view,
            "legal_moves": list(self.legal_moves),
            "status": self.status,
        }
        if self.result is not None:
            msg["result"] = self.result.to_wire()
        return msg


@dataclass
class Match:
    """A live session. Single-writer: mutate only via submit/reset."""

    rules: GameRules
    seat_names: tuple[str, ...]
    seed: int
    state: object
    rng: Rng
    history: list[str] = field(default_factory=list)
    status: str = "in_progress"
    result: Result | None = None

    @property
    def game_id(self) -> str:
        return self.rules.game_id

    @property
    def seats(self) -> int:
        return len(self.seat_names)

    def to_move(self) -> int | None:
        if self.status == "finished":
            return None
        return self.rules.to_move(self.state)

    def legal_moves(self, seat: int) -> Sequence[str]:
        if self.status == "finished":
            return ()
        return self.rules.legal_moves(self.state, seat)

    def submit(self, seat: int, token: str) -> list[Event]:
        if self.status == "finished":
            raise MatchFinished(f"match is finished: {self.result}")
        token = canonical_token(token)
        mover = self.rules.to_move(self.state)
        if seat != mover:
            raise NotYourTurn(f"seat {seat} moved but seat {mover} is to move")
        masked = self.rules.hidden_token(self.state, token)
        new_state, events = self.rules.apply(self.state, seat, token, self.rng)
        self.state = new_state
        self.history.append(token)
        out: list[Event] = [
            {"kind": "move", "seat": seat, "token": "***" if masked else token}
        ]
        out.extend(events)
        result = self.rules.terminal(new_state)
        if result is not None:
            self.status = "finished"
            self.result = result
            out.append({"kind": "finished", "result": result.to_wire()})
        else:
            out.append({"kind": "turn", "seat": self.rules.to_move(new_state)})
        return out

    def observe(self, viewer: int | None) -> Observation:
        legal = [] if viewer is None else self.legal_moves(viewer)
        turn = self.to_move()
        if turn is not None and self.rules.hidden_decision(self.state):
            turn = None
        return Observation(
            viewer=viewer,
            game_id=self.game_id,
            turn=turn,
            public_view=self.rules.observe(self.state, viewer),
            legal_moves=legal,
            status=self.status,
            result=self.result,
            state=self.state if self.rules.perfect_information else None,
        )

    def save(self) -> MatchRecord:
        return MatchRecord(
            game_id=self.game_id,
            seat_names=self.seat_names,
            seed=self.seed,
            moves=tuple(self.history),
        )

    def reset(self, new_seed: int) -> "Match":
        """Fresh session with the same game and seats."""
        return create_match(self.game_id, list(self.seat_names), new_seed)


def create_match(game_id: str, seat_names: list[str], seed: int) -> Match:
    rules = get_rules(game_id)
    n = len(seat_names)
    if not rules.seats_min <= n <= rules.seats_max:
        raise BadSeatCount(
            f"{game_id} takes {rules.seats_min}-{rules.seats_max} seats, got {n}"
        )
    rng = Rng(seed)
    state = rules.initial_state(n, rng)
    return Match(
        rules=rules,
        seat_names=tuple(seat_names),
        seed=seed,
        state=state,
        rng=rng,
    )


def load(record: MatchRecord) -> Match:
    """Rebuild a match by replaying the record from its seed."""
    match = create_match(record.game_id, list(record.seat_names), record.seed)
    for i, token in enumerate(record.moves):
        if match.status == "finished":
            raise ReplayFailure(f"move {i} ({token!r}) after the game ended")
        seat = match.to_move()
        try:
            match.submit(seat, token)
        except BoardForgeError as exc:
            raise ReplayFailure(f"move {i} ({token!r}) failed replay: {exc}") from exc
    return match

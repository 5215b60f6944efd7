"""Wire message codec: one JSON object per line (TCP) or frame (WebSocket).

Both transports carry identical payloads. Every message has a "type" field;
replies that answer a game-level mistake use error{code, message} and never
cost the sender its connection.
"""

from __future__ import annotations

import json

from ..errors import (
    BadSeatCount,
    BadToken,
    BoardForgeError,
    IllegalMove,
    InvalidArgument,
    MatchFinished,
    NotYourTurn,
    UnknownGame,
)

PROTO_VERSION = 1

# error codes
BAD_REQUEST = "bad_request"
UNKNOWN_GAME = "unknown_game"
UNKNOWN_MATCH = "unknown_match"
SEAT_TAKEN = "seat_taken"
NOT_YOUR_TURN = "not_your_turn"
ILLEGAL_MOVE = "illegal_move"
MATCH_FINISHED = "match_finished"
PROTOCOL = "protocol"


def error_code_for(exc: BoardForgeError) -> str:
    if isinstance(exc, UnknownGame):
        return UNKNOWN_GAME
    if isinstance(exc, NotYourTurn):
        return NOT_YOUR_TURN
    if isinstance(exc, (IllegalMove, BadToken)):
        return ILLEGAL_MOVE
    if isinstance(exc, MatchFinished):
        return MATCH_FINISHED
    if isinstance(exc, (BadSeatCount, InvalidArgument)):
        return BAD_REQUEST
    return BAD_REQUEST


def encode(msg: dict) -> str:
    """Single-line JSON: a reply never spans frames or lines."""
    return json.dumps(msg, separators=(",", ":"))


def decode(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("type"), str):
        raise ValueError("message must be a JSON object with a string 'type'")
    return doc


def error(code: str, message: str) -> dict:
    return {"type": "error", "code": code, "message": message}


def event(kind: str, detail: dict) -> dict:
    return {"type": "event", "kind": kind, "detail": detail}

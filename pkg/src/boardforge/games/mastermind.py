"""Mastermind: crack a 4-digit code over digits 1-6 within 10 guesses.

Solo mode draws the secret from the match rng. In the two-player mode seat 0
is the codemaker and submits "secret dddd" as a hidden move, then seat 1
guesses. The secret becomes public once the game ends.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from .base import GameRules, Result, SeatResult, win_loss

CODE_LEN = 4
DIGITS = 6
MAX_GUESSES = 10

AWAIT_SECRET = "await_secret"
GUESSING = "guessing"
DONE = "done"


def feedback(secret: tuple[int, ...], guess: tuple[int, ...]) -> tuple[int, int]:
    """(black, white): exact matches, then color matches net of blacks."""
    black = sum(1 for s, g in zip(secret, guess) if s == g)
    common = 0
    for color in range(1, DIGITS + 1):
        common += min(secret.count(color), guess.count(color))
    return black, common - black


def all_codes() -> list[tuple[int, ...]]:
    codes = []
    for n in range(DIGITS**CODE_LEN):
        code = []
        for _ in range(CODE_LEN):
            code.append(n % DIGITS + 1)
            n //= DIGITS
        codes.append(tuple(reversed(code)))
    return codes


def code_str(code: tuple[int, ...]) -> str:
    return "".join(str(d) for d in code)


_TOKEN_CACHE: dict[str, tuple[str, ...]] = {}


def move_tokens(prefix: str) -> tuple[str, ...]:
    """All 1296 "<prefix> dddd" tokens; shared tuple per prefix."""
    if prefix not in _TOKEN_CACHE:
        _TOKEN_CACHE[prefix] = tuple(f"{prefix} {code_str(c)}" for c in all_codes())
    return _TOKEN_CACHE[prefix]


def _parse_code(text: str) -> tuple[int, ...]:
    if len(text) != CODE_LEN or not text.isdigit():
        raise BadToken(f"code must be {CODE_LEN} digits, got {text!r}")
    code = tuple(int(ch) for ch in text)
    if any(d < 1 or d > DIGITS for d in code):
        raise BadToken(f"digits must be 1-{DIGITS}, got {text!r}")
    return code


@dataclass(frozen=True)
class MastermindState:
    seats: int
    phase: str
    secret: tuple[int, ...] | None
    guesses: tuple[tuple[tuple[int, ...], int, int], ...]  # (code, black, white)
    cracked: bool = False


class MastermindRules(GameRules):
    game_id = "mastermind"
    display_name = "Mastermind"
    seats_min = 1
    seats_max = 2
    perfect_information = False

    def initial_state(self, seats: int, rng: Rng) -> MastermindState:
        if seats == 1:
            secret = tuple(rng.below(DIGITS) + 1 for _ in range(CODE_LEN))
            return MastermindState(seats=1, phase=GUESSING, secret=secret, guesses=())
        return MastermindState(seats=2, phase=AWAIT_SECRET, secret=None, guesses=())

    def _breaker(self, state: MastermindState) -> int:
        return 0 if state.seats == 1 else 1

    def to_move(self, state: MastermindState) -> int:
        return 0 if state.phase == AWAIT_SECRET else self._breaker(state)

    def hidden_decision(self, state: MastermindState) -> bool:
        return state.phase == AWAIT_SECRET

    def hidden_token(self, state: MastermindState, token: str) -> bool:
        return state.phase == AWAIT_SECRET

    def legal_moves(self, state: MastermindState, seat: int):
        if state.phase == DONE or seat != self.to_move(state):
            return ()
        return move_tokens("secret" if state.phase == AWAIT_SECRET else "guess")

    def apply(self, state: MastermindState, seat: int, token: str, rng: Rng):
        parts = token.split()
        if len(parts) != 2 or parts[0] not in ("secret", "guess"):
            raise BadToken(f"expected 'secret dddd' or 'guess dddd', got {token!r}")
        code = _parse_code(parts[1])
        if parts[0] == "secret":
            if state.phase != AWAIT_SECRET:
                raise IllegalMove("secret is already set")
            new = replace(state, phase=GUESSING, secret=code)
            return new, [{"kind": "secret_set", "seat": seat}]
        if state.phase != GUESSING:
            raise IllegalMove("no secret to guess yet")
        black, white = feedback(state.secret, code)
        guesses = state.guesses + ((code, black, white),)
        cracked = black == CODE_LEN
        phase = DONE if cracked or len(guesses) >= MAX_GUESSES else GUESSING
        new = replace(state, phase=phase, guesses=guesses, cracked=cracked)
        events = [
            {
                "kind": "feedback",
                "guess": code_str(code),
                "black": black,
                "white": white,
            }
        ]
        return new, events

    def terminal(self, state: MastermindState) -> Result | None:
        if state.phase != DONE:
            return None
        used = len(state.guesses)
        if state.seats == 1:
            return Result((SeatResult("win" if state.cracked else "loss", used),))
        # Breaker (seat 1) wins by cracking within the guess budget.
        winner = 1 if state.cracked else 0
        return win_loss(winner, 2)

    def observe(self, state: MastermindState, viewer: int | None) -> dict:
        view = {
            "phase": state.phase,
            "guesses": [
                {"guess": code_str(c), "black": b, "white": w}
                for c, b, w in state.guesses
            ],
            "guesses_left": MAX_GUESSES - len(state.guesses),
        }
        codemaker = viewer == 0 and state.seats == 2
        if state.secret is not None and (codemaker or state.phase == DONE):
            view["secret"] = code_str(state.secret)
        return view

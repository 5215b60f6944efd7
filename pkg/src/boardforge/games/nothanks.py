"""No Thanks!: pay a chip to dodge the face-up card, or take it with the pot.

24 of the 33 card values 3..35 are in play; the 9 removed cards stay secret
for the whole game. A hand scores the sum of the lowest value of each run of
consecutive cards, minus chips; lowest total wins. Chip counts are public.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import BadToken, IllegalMove
from ..rng import Rng
from .base import GameRules, Result, from_scores

CARD_MIN = 3
CARD_MAX = 35
DECK_SIZE = 24
CHIPS_BY_SEATS = {3: 11, 4: 11, 5: 11, 6: 9, 7: 7}


def score_hand(cards: frozenset[int], chips: int) -> int:
    """Sum of the lowest card of each maximal consecutive run, minus chips."""
    total = 0
    for card in cards:
        if card - 1 not in cards:
            total += card
    return total - chips


@dataclass(frozen=True)
class NoThanksState:
    deck: tuple[int, ...]  # hidden draw order, next card last
    face_up: int | None
    pot: int
    hands: tuple[frozenset[int], ...]
    chips: tuple[int, ...]
    to_move: int


class NoThanksRules(GameRules):
    game_id = "nothanks"
    display_name = "No Thanks!"
    seats_min = 3
    seats_max = 7
    perfect_information = False

    def initial_state(self, seats: int, rng: Rng) -> NoThanksState:
        values = list(range(CARD_MIN, CARD_MAX + 1))
        rng.shuffle(values)
        deck = values[:DECK_SIZE]  # the other 9 are never revealed
        face_up = deck.pop()
        chips = CHIPS_BY_SEATS[seats]
        return NoThanksState(
            deck=tuple(deck),
            face_up=face_up,
            pot=0,
            hands=tuple(frozenset() for _ in range(seats)),
            chips=tuple(chips for _ in range(seats)),
            to_move=0,
        )

    def to_move(self, state: NoThanksState) -> int:
        return state.to_move

    def legal_moves(self, state: NoThanksState, seat: int) -> list[str]:
        if state.face_up is None or seat != state.to_move:
            return []
        moves = ["take"]
        if state.chips[seat] > 0:
            moves.insert(0, "pay")
        return moves

    def apply(self, state: NoThanksState, seat: int, token: str, rng: Rng):
        if token not in ("take", "pay"):
            raise BadToken(f"no thanks move must be 'take' or 'pay', got {token!r}")
        if state.face_up is None:
            raise IllegalMove("no card on the table")
        if token == "pay":
            if state.chips[seat] == 0:
                raise IllegalMove("no chips left, the card must be taken")
            chips = list(state.chips)
            chips[seat] -= 1
            new = replace(
                state,
                pot=state.pot + 1,
                chips=tuple(chips),
                to_move=(seat + 1) % len(state.hands),
            )
            return new, [{"kind": "pay", "seat": seat, "pot": new.pot}]
        hands = list(state.hands)
        hands[seat] = hands[seat] | {state.face_up}
        chips = list(state.chips)
        chips[seat] += state.pot
        events = [
            {
                "kind": "take",
                "seat": seat,
                "card": state.face_up,
                "chips_gained": state.pot,
            }
        ]
        deck = list(state.deck)
        face_up = deck.pop() if deck else None
        if face_up is not None:
            events.append({"kind": "reveal", "card": face_up})
        new = NoThanksState(
            deck=tuple(deck),
            face_up=face_up,
            pot=0,
            hands=tuple(hands),
            chips=tuple(chips),
            to_move=seat,  # the taker decides again on the next card
        )
        return new, events

    def terminal(self, state: NoThanksState) -> Result | None:
        if state.face_up is not None:
            return None
        scores = [
            score_hand(hand, chips) for hand, chips in zip(state.hands, state.chips)
        ]
        return from_scores(scores, lower_wins=True)

    def observe(self, state: NoThanksState, viewer: int | None) -> dict:
        return {
            "face_up": state.face_up,
            "pot": state.pot,
            "deck_remaining": len(state.deck),
            "hands": [sorted(hand) for hand in state.hands],
            "chips": list(state.chips),
            "to_move": state.to_move,
        }

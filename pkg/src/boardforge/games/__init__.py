"""Rule engines for the seven playable games, keyed by game id."""

from __future__ import annotations

from ..errors import UnknownGame
from .base import GameRules

_REGISTRY: dict[str, GameRules] = {}


def register(rules: GameRules) -> GameRules:
    _REGISTRY[rules.game_id] = rules
    return rules


def get_rules(game_id: str) -> GameRules:
    try:
        return _REGISTRY[game_id]
    except KeyError:
        raise UnknownGame(f"no such game: {game_id!r}") from None


def game_ids() -> list[str]:
    return list(_REGISTRY)


def _register_all() -> None:
    from . import blackbox, kalah, mastermind, nothanks, othello, pig, pushfight

    register(pig.PigRules())
    register(mastermind.MastermindRules())
    register(kalah.KalahRules())
    register(nothanks.NoThanksRules())
    register(othello.OthelloRules())
    register(blackbox.BlackBoxRules())
    register(pushfight.PushFightRules())


_register_all()

"""Worst-case-minimizing Mastermind solver (five-guess method).

Every move minimizes, over all 1296 possible guesses, the largest surviving
candidate bucket across the feedback classes; ties prefer guesses that could
themselves be the secret, then the numerically smallest code. The resulting
decision tree cracks any secret within five guesses.
"""

from __future__ import annotations

import numpy as np

from ..errors import InconsistentHistory
from ..games.mastermind import CODE_LEN, all_codes, feedback

_CODES: list[tuple[int, ...]] = all_codes()
_INDEX = {code: i for i, code in enumerate(_CODES)}
_SOLVED_FB = CODE_LEN * 5  # encoded (black=4, white=0)

_fb_table: np.ndarray | None = None
_memo: dict[tuple[int, ...], int] = {}


def _feedback_table() -> np.ndarray:
    """fb[g, s] = black*5 + white for guess g against secret s."""
    global _fb_table
    if _fb_table is None:
        codes = np.array(_CODES, dtype=np.uint8)  # (1296, 4)
        black = (codes[:, None, :] == codes[None, :, :]).sum(axis=2).astype(np.uint8)
        common = np.zeros((len(_CODES), len(_CODES)), dtype=np.uint8)
        for color in range(1, 7):
            counts = (codes == color).sum(axis=1).astype(np.uint8)
            common += np.minimum(counts[:, None], counts[None, :])
        _fb_table = black * 5 + (common - black)
    return _fb_table


def consistent_candidates(history: list[tuple[tuple[int, ...], int, int]]) -> list[tuple[int, ...]]:
    """Codes matching every (guess, black, white) row of the history."""
    fb = _feedback_table()
    alive = np.ones(len(_CODES), dtype=bool)
    for guess, black, white in history:
        alive &= fb[_INDEX[guess]] == black * 5 + white
    return [_CODES[i] for i in np.nonzero(alive)[0]]


def _best_guess(candidate_idx: tuple[int, ...]) -> int:
    key = candidate_idx
    if key in _memo:
        return _memo[key]
    fb = _feedback_table()
    cand = np.fromiter(candidate_idx, dtype=np.int64)
    cand_set = set(candidate_idx)
    best = None
    for g in range(len(_CODES)):
        buckets = np.bincount(fb[g, cand], minlength=26)
        buckets[_SOLVED_FB] = 0  # a correct guess leaves nothing to solve
        worst = int(buckets.max())
        rank = (worst, g not in cand_set, g)
        if best is None or rank < best:
            best = rank
    _memo[key] = best[2]
    return best[2]


def next_guess(history: list[tuple[tuple[int, ...], int, int]]) -> tuple[int, ...]:
    """The five-guess move for the given feedback history."""
    candidates = consistent_candidates(history)
    if not candidates:
        raise InconsistentHistory("no code matches the reported feedback")
    if len(candidates) == 1:
        return candidates[0]
    return _CODES[_best_guess(tuple(_INDEX[c] for c in candidates))]


def solve_secret(secret: tuple[int, ...], max_guesses: int = 10) -> list[tuple[int, ...]]:
    """Play the solver against a known secret; returns the guesses made."""
    history: list[tuple[tuple[int, ...], int, int]] = []
    for _ in range(max_guesses):
        guess = next_guess(history)
        black, white = feedback(secret, guess)
        history.append((guess, black, white))
        if black == CODE_LEN:
            return [h[0] for h in history]
    raise InconsistentHistory(f"failed to crack {secret} in {max_guesses} guesses")

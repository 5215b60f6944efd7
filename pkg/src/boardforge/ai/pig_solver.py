"""Exact Pig solver: value iteration over (own score, opponent score, total).

P[i, j, k] is the win probability of the player to move with banked score i,
opponent score j, and turn total k. Holding hands the opponent the state
(j, i + k, 0); rolling averages the pig-out branch with the five productive
faces. Iteration runs to a sup-norm fixpoint.
"""

from __future__ import annotations

import numpy as np

HOLD = "hold"
ROLL = "roll"


class PigValueTable:
    """Immutable solved table; safe to share between agents."""

    def __init__(self, target: int, p: np.ndarray):
        self.target = target
        self._p = p  # shape (target, target, target + 6); padded k >= target - i is 1.0

    @property
    def array(self) -> np.ndarray:
        """Read-only (target, target, target+6) win-probability cube."""
        view = self._p.view()
        view.flags.writeable = False
        return view

    def win_prob(self, i: int, j: int, k: int) -> float:
        if i + k >= self.target:
            return 1.0
        return float(self._p[i, j, k])

    def hold_value(self, i: int, j: int, k: int) -> float:
        if i + k >= self.target:
            return 1.0
        return 1.0 - self.win_prob(j, i + k, 0)

    def roll_value(self, i: int, j: int, k: int) -> float:
        total = 1.0 - self.win_prob(j, i, 0)
        for r in range(2, 7):
            total += 1.0 if i + k + r >= self.target else self.win_prob(i, j, k + r)
        return total / 6.0

    def action(self, i: int, j: int, k: int) -> str:
        if i + k >= self.target:
            return HOLD
        # Lexicographic tie-break: "hold" < "roll".
        return HOLD if self.hold_value(i, j, k) >= self.roll_value(i, j, k) else ROLL

    def bellman_residual(self) -> float:
        backup = _backup(self._p, self.target)
        return float(np.abs(backup - self._p).max())


def _valid_mask(target: int) -> np.ndarray:
    i = np.arange(target)[:, None, None]
    k = np.arange(target + 6)[None, None, :]
    return np.broadcast_to((i + k) < target, (target, target, target + 6))


def _backup(p: np.ndarray, target: int) -> np.ndarray:
    t = target
    p0 = p[:, :, 0]  # (i, j) -> value at turn total 0
    i_idx = np.arange(t)[:, None, None]
    j_idx = np.arange(t)[None, :, None]
    k_idx = np.arange(t + 6)[None, None, :]
    ik = np.minimum(i_idx + k_idx, t - 1)  # clipped; invalid cells masked later
    hold = 1.0 - p0[j_idx, ik]
    roll = np.broadcast_to((1.0 - p0.T)[:, :, None], p.shape).copy()
    for r in range(2, 7):
        shifted = np.full(p.shape, 1.0)
        shifted[:, :, : t + 6 - r] = p[:, :, r:]
        roll += shifted
    roll /= 6.0
    new = np.maximum(hold, roll)
    out = np.ones_like(p)
    mask = _valid_mask(t)
    out[mask] = new[mask]
    return out


def solve(target: int = 100, epsilon: float = 1e-9, max_sweeps: int = 20_000) -> PigValueTable:
    p = np.ones((target, target, target + 6))
    p[_valid_mask(target)] = 0.0
    for _ in range(max_sweeps):
        new = _backup(p, target)
        diff = float(np.abs(new - p).max())
        p = new
        if diff < epsilon:
            return PigValueTable(target, p)
    raise RuntimeError(f"pig solver did not converge within {max_sweeps} sweeps")


_FULL_TABLE: PigValueTable | None = None


def full_table() -> PigValueTable:
    """Shared solved table for the standard target of 100."""
    global _FULL_TABLE
    if _FULL_TABLE is None:
        _FULL_TABLE = solve(100)
    return _FULL_TABLE

"""Pig value table: fixpoint residual, scalar cross-check, monotonicity."""

import numpy as np
import pytest

from boardforge.ai import pig_solver


def scalar_fixpoint(target, epsilon=1e-12, max_rounds=100_000):
    """Dict-based reference solver, no vectorization shortcuts."""
    states = [
        (i, j, k)
        for i in range(target)
        for j in range(target)
        for k in range(target - i)
    ]
    p = {s: 0.0 for s in states}

    def value(i, j, k):
        if i + k >= target:
            return 1.0
        return p[(i, j, k)]

    for _ in range(max_rounds):
        worst = 0.0
        new = {}
        for i, j, k in states:
            hold = 1.0 - value(j, i + k, 0)
            roll = 1.0 - value(j, i, 0)
            for r in range(2, 7):
                roll += 1.0 if i + k + r >= target else value(i, j, k + r)
            roll /= 6.0
            best = max(hold, roll)
            new[(i, j, k)] = best
            worst = max(worst, abs(best - p[(i, j, k)]))
        p = new
        if worst < epsilon:
            return p
    raise RuntimeError("scalar solver did not converge")


@pytest.fixture(scope="module")
def small_table():
    return pig_solver.solve(12, 1e-11)


def test_matches_scalar_reference(small_table):
    reference = scalar_fixpoint(12)
    worst = max(
        abs(small_table.win_prob(i, j, k) - value)
        for (i, j, k), value in reference.items()
    )
    assert worst < 1e-9


def test_bellman_residual_below_tolerance(small_table):
    assert small_table.bellman_residual() < 1e-9


def test_winning_bank_is_hold(small_table):
    target = small_table.target
    for i in range(target):
        for k in range(target - i, target + 5):
            assert small_table.win_prob(i, 3, k) == 1.0
            assert small_table.action(i, 3, k) == "hold"


def test_monotone_in_turn_total(small_table):
    t = small_table.target
    for i in range(t):
        for j in range(t):
            values = [small_table.win_prob(i, j, k) for k in range(t - i)]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_probabilities_in_unit_interval(small_table):
    t = small_table.target
    grid = np.array(
        [
            small_table.win_prob(i, j, k)
            for i in range(t)
            for j in range(t)
            for k in range(t - i)
        ]
    )
    assert grid.min() >= 0.0 and grid.max() <= 1.0


def test_policy_prefers_roll_from_scratch(small_table):
    # At 0/0 with nothing staked, holding is a pure pass: roll must win ties.
    assert small_table.action(0, 0, 0) == "roll"

"""Kalah sowing, captures, extra turns, sweeps, and seed conservation."""

import random

import pytest

from boardforge.engine import create_match
from boardforge.errors import BadToken, IllegalMove
from boardforge.games.kalah import KalahRules, KalahState
from boardforge.rng import Rng

rules = KalahRules()


def hand_sow(pits, start, skip):
    """Independent sowing oracle: drop one seed per pit, skipping `skip`."""
    pits = list(pits)
    seeds = pits[start]
    pits[start] = 0
    pos = start
    while seeds:
        pos = (pos + 1) % 14
        if pos == skip:
            continue
        pits[pos] += 1
        seeds -= 1
    return pits, pos


def test_opening_pit3_gives_extra_turn():
    match = create_match("kalah", ["S", "N"], 1)
    before = match.state.pits
    expect, last = hand_sow(before, 2, 13)
    events = match.submit(0, "pit 3")
    assert last == 6
    assert list(match.state.pits) == expect
    assert match.state.pits[6] == 1
    assert match.to_move() == 0
    assert any(e["kind"] == "extra_turn" for e in events)


def test_capture_of_opposite_pit():
    # South plays pit 2 (one seed): it lands in the empty pit index 2, whose
    # opposite (12 - 2 = 10) holds 3, so the store gains 1 + 3 = 4.
    pits = [0, 1, 0, 0, 0, 0, 5, 4, 4, 4, 3, 4, 4, 0]
    state = KalahState(pits=tuple(pits), to_move=0)
    new, events = rules.apply(state, 0, "pit 2", Rng(1))
    assert new.pits[6] == 5 + 4
    assert new.pits[2] == 0 and new.pits[10] == 0
    assert any(e["kind"] == "capture" and e["seeds"] == 4 for e in events)


def test_no_capture_when_opposite_empty():
    pits = [0, 1, 0, 0, 0, 4, 5, 4, 4, 4, 0, 4, 4, 0]
    state = KalahState(pits=tuple(pits), to_move=0)
    new, events = rules.apply(state, 0, "pit 2", Rng(1))
    assert new.pits[2] == 1  # seed stays put
    assert not any(e["kind"] == "capture" for e in events)


def test_sweep_and_result():
    # South's last seed leaves their side empty; north sweeps the rest.
    pits = [0, 0, 0, 0, 0, 1, 10, 2, 2, 2, 2, 2, 2, 25]
    state = KalahState(pits=tuple(pits), to_move=0)
    new, events = rules.apply(state, 0, "pit 6", Rng(1))
    assert new.finished
    assert sum(new.pits) == sum(pits)
    assert new.pits[6] == 11
    assert new.pits[13] == 25 + 12
    result = rules.terminal(new)
    assert result.seats[1].outcome == "win"
    assert any(e["kind"] == "sweep" for e in events)


def test_draw_result():
    pits = [0, 0, 0, 0, 0, 1, 23, 0, 0, 0, 0, 0, 0, 24]
    state = KalahState(pits=tuple(pits), to_move=0)
    new, _ = rules.apply(state, 0, "pit 6", Rng(1))
    result = rules.terminal(new)
    assert result is not None
    assert all(r.outcome == "draw" for r in result.seats)


def test_empty_pit_and_bad_tokens():
    state = KalahState(pits=tuple([0] * 6 + [24] + [4] * 6 + [0]), to_move=0)
    with pytest.raises(IllegalMove):
        rules.apply(state, 0, "pit 1", Rng(1))
    with pytest.raises(BadToken):
        rules.apply(state, 0, "pit 7", Rng(1))
    with pytest.raises(BadToken):
        rules.apply(state, 0, "pit x", Rng(1))


def test_mover_relative_tokens():
    match = create_match("kalah", ["S", "N"], 1)
    match.submit(0, "pit 1")
    assert match.to_move() == 1
    match.submit(1, "pit 1")  # north's pit 1 is index 7
    assert match.state.pits[7] == 0


def test_seed_sum_invariant_random_games():
    pick = random.Random(13)
    for trial in range(30):
        match = create_match("kalah", ["S", "N"], 1000 + trial)
        while match.status != "finished":
            legal = match.legal_moves(match.to_move())
            match.submit(match.to_move(), pick.choice(legal))
            assert sum(match.state.pits) == 48
        result = match.result
        assert result is not None
        scores = [s.score for s in result.seats]
        assert sum(scores) == 48


def test_miniature_board_parameterization():
    mini = KalahRules(pits_per_side=2, seeds_per_pit=2)
    state = mini.initial_state(2, Rng(1))
    assert sum(state.pits) == 8
    assert len(state.pits) == 6
    assert mini.legal_moves(state, 0) == ["pit 1", "pit 2"]

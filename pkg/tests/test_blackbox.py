"""Black Box ray physics, reciprocity, scoring, and round flow."""

import random

import pytest

from boardforge.engine import create_match
from boardforge.errors import BadToken
from boardforge.games.blackbox import (
    guess_tokens,
    port_entry,
    round_score,
    trace,
)


def test_empty_grid_straight_exits():
    assert trace(set(), 1) == ("exit", 24)
    assert trace(set(), 8) == ("exit", 17)
    assert trace(set(), 9) == ("exit", 32)
    assert trace(set(), 16) == ("exit", 25)
    assert trace(set(), 24) == ("exit", 1)
    assert trace(set(), 31) == ("exit", 10)


def test_atom_in_path_hits():
    # Port 3 travels east along row index 2.
    assert trace({(2, 5)}, 3) == ("hit", None)
    assert trace({(0, 0)}, 1) == ("hit", None)


def test_single_deflection_hand_traced():
    # Eastbound from port 1; atom at (1, 4) sits forward-right at column 4,
    # so the ray turns left (north) from (0, 3) and leaves the top at
    # column 3, which is port 32 - 3 = 29.
    assert trace({(1, 4)}, 1) == ("exit", 29)


def test_edge_reflection_before_entry():
    # Atom adjacent to the entry lane deflects the ray before it enters.
    assert trace({(1, 0)}, 1) == ("reflect", None)
    assert trace({(0, 0)}, 2) == ("reflect", None)


def test_double_deflection_reverses():
    # Eastbound between two atoms one cell in: comes straight back out.
    assert trace({(0, 1), (2, 1)}, 2) == ("reflect", None)


def test_hit_takes_precedence_over_deflection():
    assert trace({(0, 0), (1, 0)}, 1) == ("hit", None)


def random_atoms(pick: random.Random) -> frozenset:
    cells = pick.sample(range(64), 4)
    return frozenset((i // 8, i % 8) for i in cells)


def test_reciprocity_fuzz():
    pick = random.Random(17)
    for _ in range(300):
        atoms = random_atoms(pick)
        for port in range(1, 33):
            result, out = trace(atoms, port)
            if result == "exit":
                back = trace(atoms, out)
                assert back == ("exit", port), (atoms, port, out, back)
            # Re-shooting is stable.
            assert trace(atoms, port) == (result, out)


def test_port_entry_rejects_out_of_range():
    with pytest.raises(BadToken):
        port_entry(0)
    with pytest.raises(BadToken):
        port_entry(33)


def test_scoring_rules():
    atoms = frozenset({(0, 0), (1, 1), (2, 2), (3, 3)})
    perfect = atoms
    assert round_score([], perfect, atoms) == 0
    assert round_score([(1, "exit", 24)], perfect, atoms) == 2
    shots = [(1, "hit", None), (2, "hit", None), (9, "exit", 32)]
    one_off = frozenset({(0, 0), (1, 1), (2, 2), (7, 7)})
    assert round_score(shots, one_off, atoms) == 2 + 2 + 5


def test_solo_match_flow():
    match = create_match("blackbox", ["Solo"], 77)
    match.submit(0, "ray 1")
    match.submit(0, "ray 9")
    atoms = match.state.atoms
    token = "guess " + " ".join(
        sorted(
            (f"{'abcdefgh'[c]}{r + 1}" for r, c in atoms),
            key=lambda s: (int(s[1:]), s[0]),
        )
    )
    match.submit(0, token)
    assert match.status == "finished"
    assert match.result.seats[0].outcome == "win"
    shot_cost = sum(
        1 if res in ("hit", "reflect") else 2 for _, res, _ in match.state.shots
    )
    assert match.result.seats[0].score == shot_cost


def test_two_player_rounds_and_lower_total_wins():
    match = create_match("blackbox", ["A", "B"], 31)
    assert match.to_move() == 0
    first_atoms = match.state.atoms
    # Seat 0 guesses perfectly with no shots: score 0.
    token = "guess " + " ".join(
        sorted(
            (f"{'abcdefgh'[c]}{r + 1}" for r, c in first_atoms),
            key=lambda s: (int(s[1:]), s[0]),
        )
    )
    match.submit(0, token)
    assert match.status == "in_progress"
    assert match.to_move() == 1
    assert len(match.state.atoms) == 4 and match.state.shots == ()
    # Seat 1 guesses blind: a1 a2 a3 a4 ordering must be board order.
    match.submit(1, "guess a1 b1 c1 d1")
    assert match.status == "finished"
    scores = [s.score for s in match.result.seats]
    assert scores[0] == 0
    if scores[1] > 0:
        assert match.result.seats[0].outcome == "win"


def test_guess_token_grammar():
    match = create_match("blackbox", ["Solo"], 3)
    with pytest.raises(BadToken):
        match.submit(0, "guess a1 a1 b1 c1")  # duplicate
    with pytest.raises(BadToken):
        match.submit(0, "guess b1 a1 c1 d1")  # out of board order
    with pytest.raises(BadToken):
        match.submit(0, "guess a1 b1 c1")  # too few
    with pytest.raises(BadToken):
        match.submit(0, "ray 33")
    with pytest.raises(BadToken):
        match.submit(0, "ray x")


def test_hidden_atoms_until_round_ends():
    match = create_match("blackbox", ["A", "B"], 55)
    view = match.observe(1).public_view
    assert "atoms" not in view
    assert view["rounds"] == []
    match.submit(0, "guess a1 b1 c1 d1")
    view = match.observe(1).public_view
    assert len(view["rounds"]) == 1
    assert len(view["rounds"][0]["atoms"]) == 4


def test_guess_token_cache():
    tokens = guess_tokens()
    assert len(tokens) == 635_376
    assert tokens[0] == "guess a1 b1 c1 d1"
    assert tokens is guess_tokens()

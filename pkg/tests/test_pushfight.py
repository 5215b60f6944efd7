"""Push Fight: placement, slides vs a flood-fill oracle, pushes, and losses."""

import random
from collections import deque

import pytest

from boardforge.engine import create_match
from boardforge.errors import BadToken, IllegalMove
from boardforge.games.pushfight import (
    MASK,
    PushFightRules,
    PushFightState,
    slide_targets,
)
from boardforge.rng import Rng

rules = PushFightRules()


def bfs_oracle(board, start):
    """Independent queue-based flood fill over empty masked neighbors."""
    seen = set()
    queue = deque([start])
    while queue:
        r, c = queue.popleft()
        for nr, nc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            cell = (nr, nc)
            if cell in MASK and cell not in board and cell not in seen:
                seen.add(cell)
                queue.append(cell)
    return seen


def play_state(board, to_move=0, moves_left=2, anchor=None):
    return PushFightState(
        board=board,
        phase="play",
        to_move=to_move,
        moves_left=moves_left,
        anchor=anchor,
        placed=(5, 5),
    )


def test_mask_has_22_cells():
    assert len(MASK) == 22
    assert (0, 2) in MASK and (0, 1) not in MASK
    assert (1, 7) in MASK and (2, 7) not in MASK
    assert (2, 0) in MASK and (3, 0) not in MASK


def test_lone_piece_reaches_whole_board():
    board = {(1, 3): (0, "s")}
    targets = slide_targets(board, (1, 3))
    assert targets == MASK - {(1, 3)}


def test_boxed_piece_has_no_targets():
    board = {
        (1, 3): (0, "s"),
        (0, 3): (1, "s"),
        (2, 3): (1, "s"),
        (1, 2): (1, "r"),
        (1, 4): (1, "r"),
    }
    assert slide_targets(board, (1, 3)) == set()


def test_slide_targets_match_flood_fill_oracle():
    pick = random.Random(12)
    cells = sorted(MASK)
    for _ in range(10_000):
        board = {}
        for cell in pick.sample(cells, pick.randrange(2, 11)):
            board[cell] = (pick.randrange(2), pick.choice("sr"))
        start = pick.choice(sorted(board))
        assert slide_targets(board, start) == bfs_oracle(board, start)


def test_placement_flow_and_half_restriction():
    match = create_match("pushfight", ["A", "B"], 1)
    with pytest.raises(IllegalMove):
        match.submit(0, "place s e2")  # right half belongs to seat 1
    match.submit(0, "place s c1")
    match.submit(0, "place s c2")
    match.submit(0, "place s c3")
    with pytest.raises(IllegalMove):
        match.submit(0, "place s d2")  # all squares placed
    match.submit(0, "place r b2")
    match.submit(0, "place r b3")
    assert match.to_move() == 1
    match.submit(1, "place s f1")
    match.submit(1, "place s f2")
    match.submit(1, "place s f3")
    match.submit(1, "place r g2")
    match.submit(1, "place r g3")
    assert match.state.phase == "play"
    assert match.to_move() == 0
    assert match.state.moves_left == 2
    assert match.state.anchor is None


def positioned_match():
    match = create_match("pushfight", ["A", "B"], 1)
    for token in [
        "place s d1", "place s d2", "place s d3", "place r c2", "place r c3",
        "place s e1", "place s e2", "place s e3", "place r f2", "place r f3",
    ]:
        match.submit(match.to_move(), token)
    return match


def test_push_moves_line_and_anchors():
    match = positioned_match()
    match.submit(0, "skip")
    events = match.submit(0, "push d2 right")
    kinds = [e["kind"] for e in events]
    assert "push" in kinds and "anchor" in kinds
    board = match.state.board
    assert board[(1, 4)] == (0, "s")  # pusher advanced into e2
    assert board[(1, 5)] == (1, "s")  # pushed piece shifted to f2
    assert match.state.anchor == (1, 4)
    assert match.to_move() == 1
    assert match.state.moves_left == 2


def test_anchored_line_cannot_be_pushed_back():
    match = positioned_match()
    match.submit(0, "skip")
    match.submit(0, "push d2 right")
    with pytest.raises(IllegalMove):
        match.submit(1, "push f2 left")  # line contains the fresh anchor
    legal = match.legal_moves(1)
    assert "push f2 left" not in legal


def test_round_cannot_push_and_empty_target_rejected():
    match = positioned_match()
    with pytest.raises(IllegalMove):
        match.submit(0, "push c2 right")  # round piece
    with pytest.raises(IllegalMove):
        match.submit(0, "push d3 down")  # nothing adjacent below


def test_rail_blocks_vertical_exit():
    board = {
        (0, 3): (0, "s"),
        (1, 3): (0, "s"),
    }
    state = play_state(board, to_move=0, moves_left=0)
    with pytest.raises(IllegalMove):
        rules.apply(state, 0, "push d2 up", Rng(1))


def test_push_off_open_edge_wins():
    board = {
        (1, 5): (0, "s"),
        (1, 6): (1, "r"),
        (1, 7): (1, "s"),
        (2, 1): (0, "s"),
        (2, 2): (0, "s"),
        (0, 3): (0, "r"),
        (0, 4): (0, "r"),
        (3, 3): (1, "s"),
        (3, 4): (1, "s"),
        (2, 5): (1, "r"),
    }
    state = play_state(board, to_move=0)
    new, events = rules.apply(state, 0, "push f2 right", Rng(1))
    assert any(e["kind"] == "fell" and e["seat"] == 1 for e in events)
    assert new.loser == 1
    result = rules.terminal(new)
    assert result.seats[0].outcome == "win"
    assert (1, 7) in new.board and new.board[(1, 7)] == (1, "r")
    assert (1, 6) in new.board and new.board[(1, 6)] == (0, "s")


def test_pushing_own_piece_off_loses():
    board = {
        (1, 6): (0, "s"),
        (1, 7): (0, "r"),
        (2, 1): (1, "s"),
    }
    state = play_state(board, to_move=0)
    new, _ = rules.apply(state, 0, "push g2 right", Rng(1))
    assert new.loser == 0
    assert rules.terminal(new).seats[1].outcome == "win"


def test_no_push_available_loses():
    # Mover is out of slides and the only adjacent piece is anchored:
    # no legal push exists, so the position is terminal and the mover loses.
    board = {
        (0, 2): (0, "s"),
        (0, 3): (1, "s"),
    }
    state = play_state(board, to_move=0, moves_left=0, anchor=(0, 3))
    assert rules._pushes(state, 0) == []
    result = rules.terminal(state)
    assert result is not None
    assert result.seats[1].outcome == "win"


def test_skip_then_forced_loss_sequence():
    # With a slide still in hand the mover is not dead yet (skip/slide are
    # legal), but no slide can create a push against a lone anchored piece.
    board = {
        (0, 2): (0, "s"),
        (0, 3): (1, "s"),
    }
    state = play_state(board, to_move=0, moves_left=1, anchor=(0, 3))
    assert rules.terminal(state) is None
    new, _ = rules.apply(state, 0, "skip", Rng(1))
    assert rules.terminal(new).seats[1].outcome == "win"


def test_grammar_errors():
    match = positioned_match()
    with pytest.raises(BadToken):
        match.submit(0, "push d2 sideways")
    with pytest.raises(BadToken):
        match.submit(0, "move d2")
    with pytest.raises(BadToken):
        match.submit(0, "place s z9")
    with pytest.raises(BadToken):
        match.submit(0, "move a1 b9")


def test_move_then_two_slide_limit():
    match = positioned_match()
    match.submit(0, "move c2 b2")
    match.submit(0, "move c3 b3")
    assert match.state.moves_left == 0
    with pytest.raises(IllegalMove):
        match.submit(0, "move b2 a3")
    with pytest.raises(IllegalMove):
        match.submit(0, "skip")
    match.submit(0, "push d2 right")
    assert match.to_move() == 1


def test_random_games_terminate():
    pick = random.Random(2)
    for trial in range(15):
        match = create_match("pushfight", ["A", "B"], 900 + trial)
        plies = 0
        while match.status != "finished":
            legal = match.legal_moves(match.to_move())
            assert legal, "no legal moves in an in-progress game"
            # Prefer pushes half the time so games end briskly.
            pushes = [m for m in legal if m.startswith("push")]
            if pushes and pick.random() < 0.5:
                token = pick.choice(pushes)
            else:
                token = pick.choice(legal)
            match.submit(match.to_move(), token)
            plies += 1
            assert plies < 10_000
        assert {r.outcome for r in match.result.seats} == {"win", "loss"}

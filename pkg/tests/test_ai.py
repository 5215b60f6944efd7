"""Agents and search: legality fuzz, greedy examples, alpha-beta vs minimax."""

import random

import pytest

from boardforge.ai import NodeCounter, alphabeta, greedy_eval, is_agent_spec, make_agent
from boardforge.ai.search import WIN_SCORE
from boardforge.engine import create_match
from boardforge.errors import InvalidArgument
from boardforge.games import get_rules
from boardforge.games.kalah import KalahRules

from helpers import DEFAULT_SEATS, playout_token


def minimax_oracle(rules, state, depth, eval_fn, seat, counter=None):
    """Plain fixed-depth minimax, no pruning; the reference for alphabeta."""
    if counter is not None:
        counter.nodes += 1
    result = rules.terminal(state)
    if result is not None:
        outcome = result.seats[seat].outcome
        value = WIN_SCORE if outcome == "win" else -WIN_SCORE if outcome == "loss" else 0.0
        return value, None
    if depth == 0:
        return eval_fn(state, seat), None
    mover = rules.to_move(state)
    maximizing = mover == seat
    best_value, best_token = None, None
    for token in sorted(rules.legal_moves(state, mover)):
        child, _ = rules.apply(state, mover, token, None)
        value, _ = minimax_oracle(rules, child, depth - 1, eval_fn, seat, counter)
        better = (
            best_value is None
            or (maximizing and value > best_value)
            or (not maximizing and value < best_value)
        )
        if better:
            best_value, best_token = value, token
    return best_value, best_token


def random_othello_position(pick):
    rules = get_rules("othello")
    state = rules.initial_state(2, None)
    for _ in range(pick.randrange(0, 45)):
        if rules.terminal(state) is not None:
            break
        moves = rules.legal_moves(state, state.to_move)
        state, _ = rules.apply(state, state.to_move, pick.choice(moves), None)
    return state


def test_alphabeta_equals_minimax_on_othello_positions():
    rules = get_rules("othello")
    eval_fn = lambda s, seat: greedy_eval("othello", s, seat)
    pick = random.Random(77)
    pruned_strictly_less = 0
    trials = 60
    for _ in range(trials):
        state = random_othello_position(pick)
        if rules.terminal(state) is not None:
            trials -= 1
            continue
        seat = rules.to_move(state)
        ab_counter, mm_counter = NodeCounter(), NodeCounter()
        ab_value, ab_move = alphabeta(rules, state, 3, eval_fn, seat, ab_counter)
        mm_value, mm_move = minimax_oracle(rules, state, 3, eval_fn, seat, mm_counter)
        assert ab_value == mm_value
        assert ab_move == mm_move
        assert ab_counter.nodes <= mm_counter.nodes
        if ab_counter.nodes < mm_counter.nodes:
            pruned_strictly_less += 1
    assert pruned_strictly_less >= 0.9 * trials


def test_alphabeta_sees_forced_win():
    # Miniature Kalah position where south's only move ends the game 6-2.
    from boardforge.games.kalah import KalahState

    mini = KalahRules(pits_per_side=2, seeds_per_pit=2)
    state = KalahState(pits=(0, 1, 5, 0, 1, 1), to_move=0)
    value, move = alphabeta(mini, state, 10, lambda s, seat: 0.0, 0)
    assert value == WIN_SCORE
    assert move == "pit 2"


def test_alphabeta_full_solve_matches_minimax_on_miniature_kalah():
    mini = KalahRules(pits_per_side=2, seeds_per_pit=2)
    eval_fn = lambda s, seat: greedy_eval("kalah", s, seat)
    state = mini.initial_state(2, None)
    depth = 40  # exceeds the miniature's game length: full solve
    ab_value, ab_move = alphabeta(mini, state, depth, eval_fn, 0)
    mm_value, mm_move = minimax_oracle(mini, state, depth, eval_fn, 0)
    assert (ab_value, ab_move) == (mm_value, mm_move)
    assert abs(ab_value) == WIN_SCORE or ab_value == 0.0


def test_kalah_extra_turn_does_not_flip_maximizer():
    # Depth 1 from the start: southern "pit 3" earns an extra turn, so the
    # child is evaluated with south still maximizing (store = +1 for south).
    rules = get_rules("kalah")
    eval_fn = lambda s, seat: greedy_eval("kalah", s, seat)
    value, move = alphabeta(rules, rules.initial_state(2, None), 1, eval_fn, 0)
    assert move == "pit 3"
    assert value == 1


def test_greedy_othello_opening_prefers_c4():
    match = create_match("othello", ["B", "W"], 1)
    agent = make_agent("greedy", seed=1)
    assert agent.choose(match.observe(0)) == "c4"


def test_greedy_eval_symmetry_examples():
    kalah = get_rules("kalah")
    assert greedy_eval("kalah", kalah.initial_state(2, None), 0) == 0
    othello = get_rules("othello")
    assert greedy_eval("othello", othello.initial_state(2, None), 0) == 0
    mid = kalah.apply(kalah.initial_state(2, None), 0, "pit 3", None)[0]
    assert greedy_eval("kalah", mid, 0) == mid.pits[6] - mid.pits[13]


def test_hold_at_threshold():
    match = create_match("pig", ["A", "B"], 2)
    agent = make_agent("hold:20", seed=0)
    while match.state.turn_total < 20:
        token = agent.choose(match.observe(match.to_move()))
        seat = match.to_move()
        before = match.state.turn_total
        assert token == ("roll" if before < 20 else "hold")
        match.submit(seat, token)
        if match.to_move() != seat:
            break
    if match.state.turn_total >= 20:
        assert agent.choose(match.observe(match.to_move())) == "hold"


def test_random_agent_deterministic_given_seed():
    match = create_match("othello", ["B", "W"], 4)
    obs = match.observe(0)
    picks = {make_agent("random", seed=9).choose(obs) for _ in range(5)}
    assert len(picks) == 1
    assert picks.pop() in obs.legal_moves


def test_knuth_agent_plays_published_opening_and_wins():
    match = create_match("mastermind", ["Solo"], 123)
    agent = make_agent("knuth", seed=0)
    guesses = 0
    while match.status != "finished":
        token = agent.choose(match.observe(0))
        assert token in match.observe(0).legal_moves
        if guesses == 0:
            assert token == "guess 1122"
        match.submit(0, token)
        guesses += 1
    assert match.result.seats[0].outcome == "win"
    assert guesses <= 5


def test_knuth_agent_as_codemaker_emits_secret():
    match = create_match("mastermind", ["Maker", "Breaker"], 3)
    agent = make_agent("knuth", seed=5)
    token = agent.choose(match.observe(0))
    assert token.startswith("secret ")
    match.submit(0, token)


def test_agent_spec_parsing():
    assert is_agent_spec("random")
    assert is_agent_spec("ab:4")
    assert is_agent_spec("hold:25")
    assert is_agent_spec("pig-optimal")
    assert not is_agent_spec("ab:x")
    assert not is_agent_spec("Alyssa")
    assert not is_agent_spec("hold:")
    with pytest.raises(InvalidArgument):
        make_agent("ab:0")
    with pytest.raises(InvalidArgument):
        make_agent("minimax")


def test_agent_game_support():
    assert make_agent("greedy").supports("othello")
    assert not make_agent("greedy").supports("blackbox")
    assert not make_agent("ab:2").supports("pig")
    assert make_agent("random").supports("blackbox")
    assert make_agent("knuth").supports("mastermind")
    assert not make_agent("hold:20").supports("kalah")


AGENT_SPECS = {
    "pig": (["random", "greedy", "hold:20"], []),
    "mastermind": (["random"], ["knuth"]),
    "kalah": (["random", "greedy"], ["ab:2"]),
    "nothanks": (["random", "greedy"], []),
    "othello": (["random", "greedy"], ["ab:2"]),
    "blackbox": (["random"], []),
    "pushfight": (["random", "greedy"], []),
}


@pytest.mark.parametrize("game_id", sorted(DEFAULT_SEATS))
def test_agents_always_choose_legal_moves(game_id):
    # 10_000 fuzzed observations per game; cheap agents check each one,
    # search/solver agents check a deterministic subsample.
    cheap_specs, heavy_specs = AGENT_SPECS[game_id]
    pick = random.Random(11)
    cheap = {spec: make_agent(spec, seed=3) for spec in cheap_specs}
    heavy = {spec: make_agent(spec, seed=3) for spec in heavy_specs}
    observations = 0
    trial = 0
    while observations < 10_000:
        match = create_match(game_id, DEFAULT_SEATS[game_id], 4_000 + trial)
        trial += 1
        while match.status != "finished" and observations < 10_000:
            seat = match.to_move()
            obs = match.observe(seat)
            legal = set(obs.legal_moves)
            for spec, agent in cheap.items():
                assert agent.choose(obs) in legal, f"{spec} broke legality"
            if observations % 25 == 0:
                for spec, agent in heavy.items():
                    assert agent.choose(obs) in legal, f"{spec} broke legality"
            observations += 1
            match.submit(seat, playout_token(match, pick))

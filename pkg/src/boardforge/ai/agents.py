"""Playing agents behind the "random", "greedy", "ab:N", "pig-optimal",
"hold:N", and "knuth" spec strings.

Agents are deterministic: each owns a seeded rng, ties break lexicographically
on move tokens, and choose() always returns a member of the observation's
legal_moves.
"""

from __future__ import annotations

from ..engine import Observation
from ..errors import InvalidArgument
from ..games import get_rules
from ..games.nothanks import score_hand
from ..games.othello import CELL_NAMES, resolve_flips
from ..games.pushfight import slide_targets
from ..rng import Rng
from . import knuth, pig_solver
from .search import alphabeta

PERFECT_INFO_2P = ("kalah", "othello", "pushfight")


def greedy_eval(game_id: str, state, seat: int) -> float:
    """Fixed per-game heuristic value of a state for one seat."""
    if game_id == "pig":
        tt = state.turn_total if state.to_move == seat else 0
        return state.scores[seat] + tt
    if game_id == "kalah":
        rules = get_rules("kalah")
        return state.pits[rules.store_of(seat)] - state.pits[rules.store_of(1 - seat)]
    if game_id == "othello":
        own, opp = (state.black, state.white) if seat == 0 else (state.white, state.black)
        return own.bit_count() - opp.bit_count()
    if game_id == "nothanks":
        return -score_hand(state.hands[seat], state.chips[seat])
    if game_id == "pushfight":
        own = sum(1 for p in state.board.values() if p[0] == seat)
        opp = len(state.board) - own
        mobility = sum(
            len(slide_targets(state.board, cell))
            for cell, piece in state.board.items()
            if piece[0] == seat
        )
        return (own - opp) * 100 + mobility
    if game_id == "mastermind":
        # Candidate-set reduction: fewer surviving codes is better.
        return -len(knuth.consistent_candidates(list(state.guesses)))
    raise InvalidArgument(f"no greedy evaluation for {game_id}")


class Agent:
    """Base: pick a move from an observation; deterministic given the seed."""

    spec = ""
    games: tuple[str, ...] = ()

    def __init__(self, seed: int = 0):
        self.rng = Rng(seed)

    def supports(self, game_id: str) -> bool:
        return not self.games or game_id in self.games

    def choose(self, obs: Observation) -> str:
        raise NotImplementedError


class RandomAgent(Agent):
    spec = "random"

    def choose(self, obs: Observation) -> str:
        legal = obs.legal_moves
        if not legal:
            raise InvalidArgument("choose() called with no legal moves")
        return legal[self.rng.below(len(legal))]


class HoldAtAgent(Agent):
    games = ("pig",)

    def __init__(self, threshold: int, seed: int = 0):
        super().__init__(seed)
        self.threshold = threshold
        self.spec = f"hold:{threshold}"

    def choose(self, obs: Observation) -> str:
        view = obs.public_view
        me = obs.viewer
        tt = view["turn_total"]
        if tt >= self.threshold or view["scores"][me] + tt >= 100:
            return "hold"
        return "roll"


class PigOptimalAgent(Agent):
    spec = "pig-optimal"
    games = ("pig",)

    def __init__(self, seed: int = 0, table: pig_solver.PigValueTable | None = None):
        super().__init__(seed)
        self._table = table  # solved lazily; the full table takes a while

    def choose(self, obs: Observation) -> str:
        if self._table is None:
            self._table = pig_solver.full_table()
        view = obs.public_view
        me = obs.viewer
        i = view["scores"][me]
        j = view["scores"][1 - me]
        return self._table.action(i, j, view["turn_total"])


class AlphaBetaAgent(Agent):
    games = PERFECT_INFO_2P

    def __init__(self, depth: int, seed: int = 0):
        if depth < 1:
            raise InvalidArgument("search depth must be >= 1")
        super().__init__(seed)
        self.depth = depth
        self.spec = f"ab:{depth}"

    def choose(self, obs: Observation) -> str:
        rules = get_rules(obs.game_id)
        eval_fn = lambda state, seat: greedy_eval(obs.game_id, state, seat)
        _, token = alphabeta(rules, obs.state, self.depth, eval_fn, seat=obs.viewer)
        assert token is not None
        return token


class GreedyAgent(Agent):
    spec = "greedy"
    games = ("pig", "kalah", "othello", "nothanks", "pushfight")

    def choose(self, obs: Observation) -> str:
        game = obs.game_id
        legal = sorted(obs.legal_moves)
        if game == "pig":
            # One-ply lookahead is undefined across dice; hold-at-20 stands in.
            view = obs.public_view
            tt = view["turn_total"]
            if tt >= 20 or view["scores"][obs.viewer] + tt >= 100:
                return "hold"
            return "roll"
        if game == "nothanks":
            view = obs.public_view
            hand = frozenset(view["hands"][obs.viewer])
            chips = view["chips"][obs.viewer]
            best = None
            for token in legal:
                if token == "take":
                    value = -score_hand(hand | {view["face_up"]}, chips + view["pot"])
                else:
                    value = -score_hand(hand, chips - 1)
                if best is None or value > best[0]:
                    best = (value, token)
            return best[1]
        if game == "othello":
            # Most immediate flips, lexicographic on ties.
            if legal == ["pass"]:
                return "pass"
            state = obs.state
            own, opp = (
                (state.black, state.white)
                if obs.viewer == 0
                else (state.white, state.black)
            )
            best = None
            for token in legal:
                flips = resolve_flips(own, opp, CELL_NAMES.index(token))
                count = flips.bit_count()
                if best is None or count > best[0]:
                    best = (count, token)
            return best[1]
        # Kalah / Push Fight: simulate each move, keep the best evaluation.
        rules = get_rules(game)
        best = None
        for token in legal:
            child, _ = rules.apply(obs.state, obs.viewer, token, None)
            value = greedy_eval(game, child, obs.viewer)
            if best is None or value > best[0]:
                best = (value, token)
        return best[1]


class KnuthAgent(Agent):
    spec = "knuth"
    games = ("mastermind",)

    def choose(self, obs: Observation) -> str:
        view = obs.public_view
        if view["phase"] == "await_secret":
            # Seated as codemaker: emit a random secret.
            digits = "".join(str(self.rng.below(6) + 1) for _ in range(4))
            return f"secret {digits}"
        history = [
            (tuple(int(ch) for ch in row["guess"]), row["black"], row["white"])
            for row in view["guesses"]
        ]
        code = knuth.next_guess(history)
        return "guess " + "".join(str(d) for d in code)


def make_agent(spec: str, seed: int = 0) -> Agent:
    """Build an agent from its spec string; raises InvalidArgument if unknown."""
    spec = spec.strip().lower()
    if spec == "random":
        return RandomAgent(seed)
    if spec == "greedy":
        return GreedyAgent(seed)
    if spec == "pig-optimal":
        return PigOptimalAgent(seed)
    if spec == "knuth":
        return KnuthAgent(seed)
    if spec.startswith("ab:"):
        try:
            return AlphaBetaAgent(int(spec[3:]), seed)
        except ValueError:
            raise InvalidArgument(f"bad search depth in {spec!r}") from None
    if spec.startswith("hold:"):
        try:
            return HoldAtAgent(int(spec[5:]), seed)
        except ValueError:
            raise InvalidArgument(f"bad threshold in {spec!r}") from None
    raise InvalidArgument(f"unknown agent spec {spec!r}")


def is_agent_spec(text: str) -> bool:
    try:
        make_agent(text)
        return True
    except InvalidArgument:
        return False

"""Command line interface: catalogue queries, local play, serving, joining.

Prompts accept exactly the per-game move token grammar, so transcripts of
scripted sessions double as protocol fixtures. Exit codes: 0 clean, 2 usage
error, 1 runtime error.
"""

from __future__ import annotations

import argparse
import getpass
import os
import sys

from . import catalog
from .ai import is_agent_spec, make_agent
from .engine import Match, MatchRecord, create_match, load
from .errors import BadToken, BoardForgeError, IllegalMove, NotYourTurn
from .games import get_rules
from .net.client import ClientError, TcpClient
from .net.server import GameServer
from .render import render_text

SEED_ENV = "BOARDFORGE_SEED"


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boardforge")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="query the game catalogue")
    p_list.add_argument("--topic")
    p_list.add_argument("--category")
    p_list.add_argument("--max-loc", type=int)
    p_list.add_argument("--players", type=int)
    p_list.add_argument("--min-rating", type=float)
    p_list.add_argument("--gui", choices=["low", "high"])

    p_play = sub.add_parser("play", help="play a local match")
    p_play.add_argument("game")
    p_play.add_argument("--seats", type=int)
    p_play.add_argument(
        "--agent",
        action="append",
        default=[],
        metavar="SEAT=SPEC",
        help="bind a seat to an agent, e.g. 1=ab:4",
    )
    p_play.add_argument("--seed", type=int)
    p_play.add_argument("--save", metavar="FILE")
    p_play.add_argument("--load", metavar="FILE")

    p_serve = sub.add_parser("serve", help="run the multiplayer server")
    p_serve.add_argument("--tcp-port", type=int, default=4000)
    p_serve.add_argument("--ws-port", type=int, default=4001)

    p_join = sub.add_parser("join", help="play on a remote server")
    p_join.add_argument("--host", required=True)
    p_join.add_argument("--port", type=int, required=True)
    p_join.add_argument("--match")
    p_join.add_argument("--create", metavar="GAME")
    p_join.add_argument("--name", default="player")
    p_join.add_argument(
        "--seat-spec",
        action="append",
        default=[],
        help="seat list for --create (names or agent specs)",
    )
    return parser


# -- list ---------------------------------------------------------------


def cmd_list(args) -> int:
    entries = catalog.load_catalog()
    topic = None
    if args.topic:
        try:
            topic = catalog.Topic(args.topic)
        except ValueError:
            names = ", ".join(t.value for t in catalog.Topic)
            raise UsageError(f"unknown topic {args.topic!r} (one of: {names})")
    rows = catalog.filter_entries(
        entries,
        topic=topic,
        category=args.category,
        max_loc=args.max_loc,
        player_count=args.players,
        min_rating=args.min_rating,
        gui_value=args.gui,
    )
    header = f"{'name':<24} {'bgg':>6} {'rating':>6} {'loc':>4} {'gui':<4} {'players':<8} {'category':<9} topics"
    print(header)
    for e in rows:
        topics = ", ".join(sorted(t.value for t in e.topics))
        mark = " *" if e.implemented else ""
        print(
            f"{e.name:<24} {e.bgg_id:>6} {e.bgg_rating:>6.1f} {e.core_loc:>4} "
            f"{e.gui_value:<4} {str(e.players):<8} {e.category:<9} {topics}{mark}"
        )
    print(f"{len(rows)} game(s)")
    return 0


# -- play -----------------------------------------------------------------


def parse_agent_bindings(specs: list[str], seats: int, seed: int) -> dict:
    agents = {}
    for binding in specs:
        if "=" not in binding:
            raise UsageError(f"--agent wants SEAT=SPEC, got {binding!r}")
        seat_text, spec = binding.split("=", 1)
        try:
            seat = int(seat_text)
        except ValueError:
            raise UsageError(f"bad seat number in {binding!r}") from None
        if not 0 <= seat < seats:
            raise UsageError(f"seat {seat} out of range for {seats} seats")
        if not is_agent_spec(spec):
            raise UsageError(f"unknown agent spec {spec!r}")
        agents[seat] = make_agent(spec, seed=(seed + seat) & ((1 << 64) - 1))
    return agents


def resolve_seed(cli_seed: int | None) -> tuple[int, bool]:
    env = os.environ.get(SEED_ENV)
    if env is not None:
        return int(env), False
    if cli_seed is not None:
        return cli_seed, False
    return int.from_bytes(os.urandom(8), "big"), True


def _read_token(match: Match, seat: int) -> str | None:
    """One move token from stdin; None on EOF. Hides hidden submissions."""
    hidden = match.rules.hidden_decision(match.state)
    prompt = f"seat {seat} ({match.seat_names[seat]})> "
    if hidden and sys.stdin.isatty():
        try:
            raw = getpass.getpass(prompt)
        except EOFError:
            return None
        print(prompt + "***")
        return raw
    try:
        raw = input(prompt)
    except EOFError:
        return None
    if not sys.stdin.isatty():
        # Scripted stdin is not echoed by the terminal; echo the move into
        # the transcript ourselves (masked for hidden submissions).
        print("***" if hidden else raw)
    return raw


def _print_events(events: list[dict]) -> None:
    for entry in events:
        detail = " ".join(f"{k}={v}" for k, v in entry.items() if k != "kind")
        print(f"  * {entry['kind']} {detail}".rstrip())


def cmd_play(args) -> int:
    game_id = args.game
    try:
        rules = get_rules(game_id)
    except BoardForgeError as exc:
        raise UsageError(str(exc)) from None
    seed, seed_was_random = resolve_seed(args.seed)
    if args.load:
        try:
            with open(args.load, "r", encoding="utf-8") as handle:
                record = MatchRecord.from_json(handle.read())
        except OSError as exc:
            print(f"cannot read {args.load}: {exc}", file=sys.stderr)
            return 1
        if record.game_id != game_id:
            raise UsageError(
                f"{args.load} holds a {record.game_id} record, not {game_id}"
            )
        match = load(record)
        print(f"resumed {game_id} at move {len(match.history)}")
    else:
        seats = args.seats if args.seats is not None else rules.seats_min
        names = [f"P{i}" for i in range(seats)]
        try:
            match = create_match(game_id, names, seed)
        except BoardForgeError as exc:
            raise UsageError(str(exc)) from None
        if seed_was_random:
            print(f"seed: {seed}", file=sys.stderr)
    agents = parse_agent_bindings(args.agent, match.seats, match.seed)

    while match.status != "finished":
        seat = match.to_move()
        obs = match.observe(seat)
        print()
        print(render_text(obs))
        if seat in agents:
            token = agents[seat].choose(obs)
            shown = "***" if match.rules.hidden_token(match.state, token) else token
            print(f"seat {seat} ({match.seat_names[seat]})> {shown} [{agents[seat].spec}]")
        else:
            token = _read_token(match, seat)
            if token is None:
                print()
                return _finish(match, args.save)
            if not token.strip():
                continue
        try:
            events = match.submit(seat, token)
        except (BadToken, IllegalMove, NotYourTurn) as exc:
            print(f"  ! {exc}")
            continue
        _print_events(events)
    print()
    print(render_text(match.observe(None)))
    return _finish(match, args.save)


def _finish(match: Match, save_path: str | None) -> int:
    if save_path:
        with open(save_path, "w", encoding="utf-8") as handle:
            handle.write(match.save().to_json())
        print(f"saved to {save_path}")
    return 0


# -- serve -----------------------------------------------------------------


def cmd_serve(args) -> int:
    server = GameServer(tcp_port=args.tcp_port, ws_port=args.ws_port)
    print(f"listening: tcp {args.tcp_port}, ws {args.ws_port}")
    try:
        server.run_forever()
    except KeyboardInterrupt:
        pass
    return 0


# -- join ---------------------------------------------------------------


def cmd_join(args) -> int:
    if bool(args.match) == bool(args.create):
        raise UsageError("join needs exactly one of --match or --create")
    client = TcpClient(args.host, args.port)
    try:
        client.hello(args.name)
        if args.create:
            seats = args.seat_spec or [args.name, "random"]
            match_id = client.create(args.create, seats)
            print(f"created match {match_id}")
        else:
            match_id = args.match
            reply = client.join(match_id)
            print(f"joined match {match_id} as seat {reply['seat']}")
        return _remote_loop(client, match_id)
    except ClientError as exc:
        print(f"server error: {exc}", file=sys.stderr)
        return 1
    finally:
        client.close()


def _remote_loop(client: TcpClient, match_id: str) -> int:
    my_seat = None
    while True:
        msg = client.recv(timeout=None)
        kind = msg["type"]
        if kind == "joined":
            my_seat = msg.get("seat")
        elif kind == "event":
            detail = " ".join(f"{k}={v}" for k, v in msg["detail"].items())
            print(f"  * {msg['kind']} {detail}")
        elif kind == "finished":
            print("match finished:", msg["result"])
            return 0
        elif kind == "error":
            print(f"  ! {msg['code']}: {msg['message']}")
        elif kind == "state":
            obs = msg["observation"]
            if my_seat is None:
                my_seat = obs.get("viewer")
            print()
            print(_render_wire_observation(obs))
            if obs["status"] == "finished":
                return 0
            if obs["turn"] is not None and obs["viewer"] == obs["turn"] or (
                obs["turn"] is None and obs["legal_moves"]
            ):
                try:
                    token = input(f"seat {obs['viewer']}> ")
                except EOFError:
                    print()
                    return 0
                if token.strip():
                    client.move(match_id, token)


def _render_wire_observation(obs: dict) -> str:
    from .engine import Observation

    local = Observation(
        viewer=obs.get("viewer"),
        game_id=obs["game_id"],
        turn=obs.get("turn"),
        public_view=obs["public_view"],
        legal_moves=obs.get("legal_moves", []),
        status=obs["status"],
        result=None,
    )
    return render_text(local)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "list": cmd_list,
        "play": cmd_play,
        "serve": cmd_serve,
        "join": cmd_join,
    }[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except BoardForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print()
        return 1


if __name__ == "__main__":
    sys.exit(main())

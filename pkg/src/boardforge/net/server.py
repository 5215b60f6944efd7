"""Authoritative game server: rooms, seats, per-viewer observations, AI seats.

All routing lives in ServerState.handle, a synchronous function driven from
one asyncio loop, so per-match serialization falls out of the single-threaded
transport. Clients never evaluate rules: every move is validated by the
engine and every participant receives its own filtered observation.
"""

from __future__ import annotations

import asyncio
import json
import os
import threading
from dataclasses import dataclass, field

from .. import catalog
from ..ai import is_agent_spec, make_agent
from ..engine import Match, create_match
from ..errors import BoardForgeError
from . import protocol, ws
from .protocol import encode, error, event

HANDSHAKE_LIMIT = 64 * 1024


@dataclass
class Session:
    name: str | None = None
    subscriptions: set[str] = field(default_factory=set)


@dataclass
class Seat:
    name: str | None = None  # reserved/last-known display name
    conn: int | None = None  # live connection, if any
    agent: object = None  # Agent instance for AI seats
    spec: str | None = None  # agent spec string
    ever_occupied: bool = False

    @property
    def is_ai(self) -> bool:
        return self.agent is not None


@dataclass
class Room:
    match: Match
    seats: list[Seat]
    spectators: set[int] = field(default_factory=set)


@dataclass
class HandleResult:
    messages: list[tuple[int, dict]] = field(default_factory=list)
    close: set[int] = field(default_factory=set)

    def send(self, conn: int, msg: dict) -> None:
        self.messages.append((conn, msg))


class ServerState:
    """Session and match registry; handle() is the single entry point."""

    def __init__(self, seed_source=None):
        self.sessions: dict[int, Session] = {}
        self.rooms: dict[str, Room] = {}
        self._next_match = 1
        self._seed_source = seed_source or (lambda: int.from_bytes(os.urandom(8), "big"))

    # -- connection lifecycle ------------------------------------------------

    def connect(self, conn: int) -> None:
        self.sessions[conn] = Session()

    def disconnect(self, conn: int) -> HandleResult:
        out = HandleResult()
        session = self.sessions.pop(conn, None)
        if session is None:
            return out
        for match_id in list(session.subscriptions):
            room = self.rooms.get(match_id)
            if room is None:
                continue
            room.spectators.discard(conn)
            for idx, seat in enumerate(room.seats):
                if seat.conn == conn:
                    seat.conn = None  # name stays for rejoin
                    self._broadcast(
                        out,
                        room,
                        event("seat_vacated", {"match": match_id, "seat": idx, "name": seat.name}),
                    )
        return out

    # -- message dispatch ----------------------------------------------------

    def handle(self, conn: int, raw: str) -> HandleResult:
        out = HandleResult()
        try:
            msg = protocol.decode(raw)
        except (json.JSONDecodeError, ValueError) as exc:
            out.send(conn, error(protocol.PROTOCOL, f"unreadable message: {exc}"))
            return out
        session = self.sessions.get(conn)
        if session is None:
            out.send(conn, error(protocol.PROTOCOL, "no session"))
            out.close.add(conn)
            return out
        kind = msg["type"]
        if kind == "hello":
            self._hello(out, conn, session, msg)
            return out
        if session.name is None:
            out.send(conn, error(protocol.PROTOCOL, "say hello first"))
            return out
        handler = {
            "create": self._create,
            "join": self._join,
            "move": self._move,
            "list_games": self._list_games,
            "list_matches": self._list_matches,
            "leave": self._leave,
        }.get(kind)
        if handler is None:
            out.send(conn, error(protocol.BAD_REQUEST, f"unknown type {kind!r}"))
            return out
        handler(out, conn, session, msg)
        return out

    # -- handlers --------------------------------------------------------

    def _hello(self, out, conn, session, msg):
        name = msg.get("name")
        proto = msg.get("proto")
        if not isinstance(name, str) or not name:
            out.send(conn, error(protocol.BAD_REQUEST, "hello needs a name"))
            return
        if proto != protocol.PROTO_VERSION:
            out.send(conn, error(protocol.PROTOCOL, f"unsupported proto {proto!r}"))
            out.close.add(conn)
            return
        session.name = name
        out.send(conn, {"type": "welcome", "session": name})

    def _create(self, out, conn, session, msg):
        game = msg.get("game")
        seat_specs = msg.get("seats")
        if not isinstance(game, str) or not isinstance(seat_specs, list) or not all(
            isinstance(s, str) and s for s in seat_specs
        ):
            out.send(conn, error(protocol.BAD_REQUEST, "create needs game and seats"))
            return
        seed = msg.get("seed", None)
        if seed is None:
            seed = self._seed_source()
        elif not isinstance(seed, int) or seed < 0 or seed >= 1 << 64:
            out.send(conn, error(protocol.BAD_REQUEST, "seed must be a 64-bit integer"))
            return
        try:
            match = create_match(game, list(seat_specs), seed)
        except BoardForgeError as exc:
            out.send(conn, error(protocol.error_code_for(exc), str(exc)))
            return
        seats: list[Seat] = []
        creator_seated = False
        for idx, spec in enumerate(seat_specs):
            if is_agent_spec(spec):
                agent = make_agent(spec, seed=(seed + idx) & ((1 << 64) - 1))
                if not agent.supports(game):
                    out.send(
                        conn,
                        error(protocol.BAD_REQUEST, f"agent {spec!r} cannot play {game}"),
                    )
                    return
                seats.append(Seat(name=spec, agent=agent, spec=spec, ever_occupied=True))
            elif spec == session.name and not creator_seated:
                seats.append(Seat(name=spec, conn=conn, ever_occupied=True))
                creator_seated = True
            else:
                seats.append(Seat(name=spec))
        match_id = f"m{self._next_match}"
        self._next_match += 1
        room = Room(match=match, seats=seats)
        self.rooms[match_id] = room
        session.subscriptions.add(match_id)
        if not creator_seated:
            room.spectators.add(conn)
        out.send(conn, {"type": "created", "match": match_id})
        self._send_states(out, room, match_id, only=conn)
        self._drive_agents(out, room, match_id)

    def _find_room(self, out, conn, msg) -> tuple[str, Room] | None:
        match_id = msg.get("match")
        room = self.rooms.get(match_id) if isinstance(match_id, str) else None
        if room is None:
            out.send(conn, error(protocol.UNKNOWN_MATCH, f"no match {match_id!r}"))
            return None
        return match_id, room

    def _join(self, out, conn, session, msg):
        found = self._find_room(out, conn, msg)
        if found is None:
            return
        match_id, room = found
        name = msg.get("name") or session.name
        if msg.get("spectate"):
            room.spectators.add(conn)
            session.subscriptions.add(match_id)
            out.send(conn, {"type": "joined", "match": match_id, "seat": None})
            self._send_states(out, room, match_id, only=conn)
            return
        wanted = msg.get("seat")
        if wanted is not None and not (
            isinstance(wanted, int) and 0 <= wanted < len(room.seats)
        ):
            out.send(conn, error(protocol.BAD_REQUEST, f"no seat {wanted!r}"))
            return
        idx = self._claimable_seat(room, wanted, name)
        if idx is None:
            out.send(conn, error(protocol.SEAT_TAKEN, "no seat available"))
            return
        seat = room.seats[idx]
        seat.conn = conn
        seat.name = name
        seat.ever_occupied = True
        session.subscriptions.add(match_id)
        room.spectators.discard(conn)
        out.send(conn, {"type": "joined", "match": match_id, "seat": idx})
        self._broadcast(
            out,
            room,
            event("seat_taken", {"match": match_id, "seat": idx, "name": name}),
            skip=conn,
        )
        self._send_states(out, room, match_id, only=conn)

    def _claimable_seat(self, room: Room, wanted: int | None, name: str) -> int | None:
        candidates = [wanted] if wanted is not None else list(range(len(room.seats)))
        free = [
            i
            for i in candidates
            if not room.seats[i].is_ai and room.seats[i].conn is None
        ]
        # Vacated seats are reserved for their previous occupant's name;
        # never-occupied seats prefer their reservation label but accept anyone.
        for idx in free:
            if room.seats[idx].ever_occupied and room.seats[idx].name == name:
                return idx
        for idx in free:
            if not room.seats[idx].ever_occupied and room.seats[idx].name == name:
                return idx
        for idx in free:
            if not room.seats[idx].ever_occupied:
                return idx
        return None

    def _move(self, out, conn, session, msg):
        found = self._find_room(out, conn, msg)
        if found is None:
            return
        match_id, room = found
        token = msg.get("token")
        if not isinstance(token, str):
            out.send(conn, error(protocol.BAD_REQUEST, "move needs a token"))
            return
        seat_idx = next(
            (i for i, seat in enumerate(room.seats) if seat.conn == conn), None
        )
        if seat_idx is None:
            out.send(conn, error(protocol.NOT_YOUR_TURN, "you are not seated"))
            return
        try:
            events = room.match.submit(seat_idx, token)
        except BoardForgeError as exc:
            out.send(conn, error(protocol.error_code_for(exc), str(exc)))
            return
        self._after_move(out, room, match_id, events)
        self._drive_agents(out, room, match_id)

    def _after_move(self, out, room, match_id, events):
        for entry in events:
            detail = {k: v for k, v in entry.items() if k != "kind"}
            detail["match"] = match_id
            self._broadcast(out, room, event(entry["kind"], detail))
        self._send_states(out, room, match_id)
        if room.match.status == "finished":
            self._broadcast(
                out,
                room,
                {
                    "type": "finished",
                    "match": match_id,
                    "result": room.match.result.to_wire(),
                },
            )

    def _drive_agents(self, out, room, match_id):
        """Let AI seats move until a human is to move or the match ends."""
        while room.match.status != "finished":
            mover = room.match.to_move()
            seat = room.seats[mover]
            if not seat.is_ai:
                break
            token = seat.agent.choose(room.match.observe(mover))
            events = room.match.submit(mover, token)
            self._after_move(out, room, match_id, events)

    def _list_games(self, out, conn, session, msg):
        games = []
        for entry in catalog.load_catalog():
            if not entry.implemented:
                continue
            games.append(
                {
                    "id": entry.game_id,
                    "name": entry.name,
                    "players": str(entry.players),
                    "category": entry.category,
                    "topics": sorted(t.value for t in entry.topics),
                    "gui_value": entry.gui_value,
                    "bgg_id": entry.bgg_id,
                    "bgg_rating": entry.bgg_rating,
                }
            )
        out.send(conn, event("games", {"games": games}))

    def _list_matches(self, out, conn, session, msg):
        rows = []
        for match_id, room in self.rooms.items():
            rows.append(
                {
                    "match": match_id,
                    "game": room.match.game_id,
                    "status": room.match.status,
                    "seats": [
                        {
                            "name": seat.name,
                            "ai": seat.is_ai,
                            "occupied": seat.is_ai or seat.conn is not None,
                        }
                        for seat in room.seats
                    ],
                }
            )
        out.send(conn, event("matches", {"matches": rows}))

    def _leave(self, out, conn, session, msg):
        found = self._find_room(out, conn, msg)
        if found is None:
            return
        match_id, room = found
        session.subscriptions.discard(match_id)
        room.spectators.discard(conn)
        left_seat = None
        for idx, seat in enumerate(room.seats):
            if seat.conn == conn:
                seat.conn = None
                left_seat = idx
        out.send(conn, event("left", {"match": match_id}))
        if left_seat is not None:
            self._broadcast(
                out,
                room,
                event("seat_vacated", {"match": match_id, "seat": left_seat}),
                skip=conn,
            )

    # -- fan-out helpers ---------------------------------------------------

    def _recipients(self, room: Room):
        for idx, seat in enumerate(room.seats):
            if seat.conn is not None:
                yield seat.conn, idx
        for conn in room.spectators:
            yield conn, None

    def _broadcast(self, out, room, msg, skip=None):
        for conn, _ in self._recipients(room):
            if conn != skip:
                out.send(conn, msg)

    def _send_states(self, out, room, match_id, only=None):
        for conn, viewer in self._recipients(room):
            if only is not None and conn != only:
                continue
            obs = room.match.observe(viewer)
            out.send(
                conn,
                {"type": "state", "match": match_id, "observation": obs.to_wire()},
            )


class GameServer:
    """Asyncio host for both transports; run inline or on a daemon thread."""

    def __init__(self, tcp_port: int = 4000, ws_port: int = 4001, state: ServerState | None = None):
        self.state = state or ServerState()
        self.tcp_port = tcp_port
        self.ws_port = ws_port
        self._loop: asyncio.AbstractEventLoop | None = None
        self._servers: list[asyncio.AbstractServer] = []
        self._writers: dict[int, tuple[str, object]] = {}
        self._next_conn = 1
        self._thread: threading.Thread | None = None
        self._ready = threading.Event()

    # -- plumbing ----------------------------------------------------------

    def _register(self, kind: str, writer) -> int:
        conn = self._next_conn
        self._next_conn += 1
        self._writers[conn] = (kind, writer)
        self.state.connect(conn)
        return conn

    def _deliver(self, result: HandleResult) -> None:
        for conn, msg in result.messages:
            entry = self._writers.get(conn)
            if entry is None:
                continue
            kind, writer = entry
            text = encode(msg)
            try:
                if kind == "tcp":
                    writer.write(text.encode() + b"\n")
                else:
                    writer.write(ws.text_frame(text))
            except (ConnectionError, RuntimeError):
                pass
        for conn in result.close:
            entry = self._writers.get(conn)
            if entry is not None:
                try:
                    entry[1].close()
                except (ConnectionError, RuntimeError):
                    pass

    def _drop(self, conn: int) -> None:
        self._writers.pop(conn, None)
        self._deliver(self.state.disconnect(conn))

    async def _serve_tcp(self, reader, writer):
        conn = self._register("tcp", writer)
        try:
            while True:
                line = await reader.readline()
                if not line:
                    break
                line = line.strip()
                if not line:
                    continue
                self._deliver(self.state.handle(conn, line.decode("utf-8", "replace")))
                if conn not in self._writers:
                    break
        except (ConnectionError, asyncio.IncompleteReadError):
            pass
        finally:
            self._drop(conn)
            try:
                writer.close()
            except ConnectionError:
                pass

    async def _serve_ws(self, reader, writer):
        try:
            raw = await reader.readuntil(b"\r\n\r\n")
        except (asyncio.IncompleteReadError, asyncio.LimitOverrunError):
            writer.close()
            return
        try:
            writer.write(ws.handshake_response(ws.parse_http_headers(raw)))
        except ValueError:
            writer.write(b"HTTP/1.1 400 Bad Request\r\n\r\n")
            writer.close()
            return
        conn = self._register("ws", writer)
        try:
            while True:
                try:
                    opcode, payload = await ws.read_frame(reader)
                except (EOFError, ConnectionError):
                    break
                if opcode == ws.OP_CLOSE:
                    writer.write(ws.build_frame(ws.OP_CLOSE, b""))
                    break
                if opcode == ws.OP_PING:
                    writer.write(ws.build_frame(ws.OP_PONG, payload))
                    continue
                if opcode != ws.OP_TEXT:
                    continue
                self._deliver(self.state.handle(conn, payload.decode("utf-8", "replace")))
                if conn not in self._writers:
                    break
        finally:
            self._drop(conn)
            try:
                writer.close()
            except ConnectionError:
                pass

    # -- lifecycle -----------------------------------------------------------

    async def _start(self):
        tcp = await asyncio.start_server(
            self._serve_tcp, "127.0.0.1", self.tcp_port, limit=HANDSHAKE_LIMIT
        )
        wss = await asyncio.start_server(
            self._serve_ws, "127.0.0.1", self.ws_port, limit=HANDSHAKE_LIMIT
        )
        self._servers = [tcp, wss]
        self.tcp_port = tcp.sockets[0].getsockname()[1]
        self.ws_port = wss.sockets[0].getsockname()[1]

    def run_forever(self):
        """Blocking entry point used by the CLI serve subcommand."""
        self._loop = asyncio.new_event_loop()
        asyncio.set_event_loop(self._loop)
        self._loop.run_until_complete(self._start())
        try:
            self._loop.run_forever()
        finally:
            self._shutdown()

    def start_background(self) -> tuple[int, int]:
        """Start on a daemon thread; returns the bound (tcp, ws) ports."""
        def runner():
            self._loop = asyncio.new_event_loop()
            asyncio.set_event_loop(self._loop)
            self._loop.run_until_complete(self._start())
            self._ready.set()
            self._loop.run_forever()
            self._shutdown()

        self._thread = threading.Thread(target=runner, daemon=True)
        self._thread.start()
        if not self._ready.wait(timeout=10):
            raise RuntimeError("server did not start")
        return self.tcp_port, self.ws_port

    def stop(self):
        if self._loop is not None:
            self._loop.call_soon_threadsafe(self._initiate_stop)
        if self._thread is not None:
            self._thread.join(timeout=10)
            self._thread = None

    def _initiate_stop(self):
        for server in self._servers:
            server.close()
        for kind, writer in list(self._writers.values()):
            try:
                writer.close()
            except (ConnectionError, RuntimeError):
                pass
        self._writers.clear()
        self._loop.stop()

    def _shutdown(self):
        for server in self._servers:
            server.close()
        self._servers = []
        pending = asyncio.all_tasks(self._loop)
        for task in pending:
            task.cancel()
        if pending:
            self._loop.run_until_complete(
                asyncio.gather(*pending, return_exceptions=True)
            )
        self._loop.close()

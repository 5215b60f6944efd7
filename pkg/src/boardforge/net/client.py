"""Blocking client handles for both transports, used by the CLI and tests."""

from __future__ import annotations

import json
import socket

from . import ws
from .protocol import PROTO_VERSION, encode


class ClientError(Exception):
    pass


class BaseClient:
    """Shared request helpers; subclasses implement the framing."""

    def send(self, msg: dict) -> None:
        raise NotImplementedError

    def recv(self, timeout: float | None = 10.0) -> dict:
        raise NotImplementedError

    def close(self) -> None:
        raise NotImplementedError

    # -- conveniences --------------------------------------------------------

    def hello(self, name: str, proto: int = PROTO_VERSION) -> dict:
        self.send({"type": "hello", "name": name, "proto": proto})
        return self.expect("welcome")

    def create(self, game: str, seats: list[str], seed: int | None = None) -> str:
        msg = {"type": "create", "game": game, "seats": seats}
        if seed is not None:
            msg["seed"] = seed
        self.send(msg)
        return self.expect("created")["match"]

    def join(self, match: str, seat: int | None = None, name: str | None = None,
             spectate: bool = False) -> dict:
        msg: dict = {"type": "join", "match": match}
        if seat is not None:
            msg["seat"] = seat
        if name is not None:
            msg["name"] = name
        if spectate:
            msg["spectate"] = True
        self.send(msg)
        return self.expect("joined")

    def move(self, match: str, token: str) -> None:
        self.send({"type": "move", "match": match, "token": token})

    def expect(self, type_: str, timeout: float = 10.0) -> dict:
        """Next message of the given type; error messages raise."""
        while True:
            msg = self.recv(timeout)
            if msg["type"] == "error":
                raise ClientError(f"{msg['code']}: {msg['message']}")
            if msg["type"] == type_:
                return msg

    def drain_until(self, pred, timeout: float = 10.0) -> list[dict]:
        """Collect messages until pred(msg) is true (inclusive)."""
        seen = []
        while True:
            msg = self.recv(timeout)
            seen.append(msg)
            if pred(msg):
                return seen


class TcpClient(BaseClient):
    """Newline-delimited JSON over TCP."""

    def __init__(self, host: str, port: int, timeout: float = 10.0):
        self.sock = socket.create_connection((host, port), timeout=timeout)
        self.file = self.sock.makefile("rb")

    def send(self, msg: dict) -> None:
        self.sock.sendall(encode(msg).encode() + b"\n")

    def recv(self, timeout: float | None = 10.0) -> dict:
        self.sock.settimeout(timeout)
        line = self.file.readline()
        if not line:
            raise ClientError("connection closed")
        return json.loads(line)

    def close(self) -> None:
        for action in (
            lambda: self.sock.shutdown(socket.SHUT_RDWR),
            self.file.close,
            self.sock.close,
        ):
            try:
                action()
            except OSError:
                pass


class WsClient(BaseClient):
    """Text frames over a WebSocket connection."""

    def __init__(self, host: str, port: int, timeout: float = 10.0):
        self.sock = socket.create_connection((host, port), timeout=timeout)
        request, _ = ws.handshake_request(host, port)
        self.sock.sendall(request)
        self.file = self.sock.makefile("rb")
        status = self.file.readline()
        if b"101" not in status:
            raise ClientError(f"handshake refused: {status!r}")
        while self.file.readline() not in (b"\r\n", b""):
            pass

    def send(self, msg: dict) -> None:
        self.sock.sendall(ws.text_frame(encode(msg), mask=True))

    def recv(self, timeout: float | None = 10.0) -> dict:
        self.sock.settimeout(timeout)
        while True:
            opcode, payload = ws.read_frame_sync(self.file)
            if opcode == ws.OP_TEXT:
                return json.loads(payload)
            if opcode == ws.OP_CLOSE:
                raise ClientError("connection closed")
            # ignore pings/pongs from the server side

    def close(self) -> None:
        try:
            self.sock.sendall(ws.build_frame(ws.OP_CLOSE, b"", mask=True))
        except OSError:
            pass
        for action in (
            lambda: self.sock.shutdown(socket.SHUT_RDWR),
            self.file.close,
            self.sock.close,
        ):
            try:
                action()
            except OSError:
                pass

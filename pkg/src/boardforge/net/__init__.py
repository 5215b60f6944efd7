"""Multiplayer server and client library (TCP lines + WebSocket frames)."""

from .client import ClientError, TcpClient, WsClient
from .protocol import PROTO_VERSION
from .server import GameServer, ServerState

__all__ = [
    "ClientError",
    "GameServer",
    "PROTO_VERSION",
    "ServerState",
    "TcpClient",
    "WsClient",
]

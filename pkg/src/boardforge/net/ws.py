"""Minimal RFC 6455 WebSocket support: handshake plus text/close/ping frames.

Enough for browsers and the bundled client; no extensions, no fragmentation
on the sending side (every outbound message fits one text frame).
"""

from __future__ import annotations

import base64
import hashlib
import os
import struct

GUID = "258EAFA5-E914-47DA-95CA-C5AB0DC85B11"

OP_CONT = 0x0
OP_TEXT = 0x1
OP_CLOSE = 0x8
OP_PING = 0x9
OP_PONG = 0xA


def accept_key(client_key: str) -> str:
    digest = hashlib.sha1((client_key + GUID).encode()).digest()
    return base64.b64encode(digest).decode()


def parse_http_headers(raw: bytes) -> dict[str, str]:
    headers = {}
    for line in raw.decode("latin-1").split("\r\n")[1:]:
        if ":" in line:
            key, value = line.split(":", 1)
            headers[key.strip().lower()] = value.strip()
    return headers


def handshake_response(headers: dict[str, str]) -> bytes:
    key = headers.get("sec-websocket-key")
    if key is None:
        raise ValueError("missing Sec-WebSocket-Key")
    return (
        "HTTP/1.1 101 Switching Protocols\r\n"
        "Upgrade: websocket\r\n"
        "Connection: Upgrade\r\n"
        f"Sec-WebSocket-Accept: {accept_key(key)}\r\n"
        "\r\n"
    ).encode()


def handshake_request(host: str, port: int, path: str = "/") -> tuple[bytes, str]:
    key = base64.b64encode(os.urandom(16)).decode()
    request = (
        f"GET {path} HTTP/1.1\r\n"
        f"Host: {host}:{port}\r\n"
        "Upgrade: websocket\r\n"
        "Connection: Upgrade\r\n"
        f"Sec-WebSocket-Key: {key}\r\n"
        "Sec-WebSocket-Version: 13\r\n"
        "\r\n"
    ).encode()
    return request, key


def build_frame(opcode: int, payload: bytes, mask: bool = False) -> bytes:
    header = bytearray([0x80 | opcode])
    length = len(payload)
    mask_bit = 0x80 if mask else 0
    if length < 126:
        header.append(mask_bit | length)
    elif length < 1 << 16:
        header.append(mask_bit | 126)
        header += struct.pack("!H", length)
    else:
        header.append(mask_bit | 127)
        header += struct.pack("!Q", length)
    if mask:
        key = os.urandom(4)
        header += key
        payload = bytes(b ^ key[i % 4] for i, b in enumerate(payload))
    return bytes(header) + payload


def text_frame(text: str, mask: bool = False) -> bytes:
    return build_frame(OP_TEXT, text.encode(), mask=mask)


async def read_frame(reader) -> tuple[int, bytes]:
    """One frame from an asyncio StreamReader; raises EOFError at stream end."""
    try:
        head = await reader.readexactly(2)
    except Exception as exc:  # IncompleteReadError or closed transport
        raise EOFError from exc
    fin = head[0] & 0x80
    opcode = head[0] & 0x0F
    masked = head[1] & 0x80
    length = head[1] & 0x7F
    if length == 126:
        length = struct.unpack("!H", await reader.readexactly(2))[0]
    elif length == 127:
        length = struct.unpack("!Q", await reader.readexactly(8))[0]
    key = await reader.readexactly(4) if masked else None
    payload = await reader.readexactly(length) if length else b""
    if key:
        payload = bytes(b ^ key[i % 4] for i, b in enumerate(payload))
    if not fin:
        more_op, more = await read_frame(reader)
        if more_op != OP_CONT:
            raise ValueError("unexpected interleaved frame")
        payload += more
    return opcode, payload


def read_frame_sync(sock_file) -> tuple[int, bytes]:
    """Blocking frame reader over a socket makefile('rb')."""
    head = sock_file.read(2)
    if len(head) < 2:
        raise EOFError
    fin = head[0] & 0x80
    opcode = head[0] & 0x0F
    masked = head[1] & 0x80
    length = head[1] & 0x7F
    if length == 126:
        length = struct.unpack("!H", sock_file.read(2))[0]
    elif length == 127:
        length = struct.unpack("!Q", sock_file.read(8))[0]
    key = sock_file.read(4) if masked else None
    payload = sock_file.read(length) if length else b""
    if key:
        payload = bytes(b ^ key[i % 4] for i, b in enumerate(payload))
    if not fin:
        more_op, more = read_frame_sync(sock_file)
        if more_op != OP_CONT:
            raise ValueError("unexpected interleaved frame")
        payload += more
    return opcode, payload

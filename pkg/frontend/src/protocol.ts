/**
 * Wire types shared with the game server, plus validation of every outbound
 * message. The client never evaluates game rules; it only builds protocol
 * messages and checks move-token membership in the server-sent legal list.
 */

export const PROTO_VERSION = 1;

export interface SeatResult {
  seat: number;
  outcome: "win" | "loss" | "draw";
  score?: number;
}

export interface Observation {
  viewer: number | null;
  game_id: string;
  turn: number | null;
  public_view: Record<string, unknown>;
  legal_moves: string[];
  status: "in_progress" | "finished";
  result?: SeatResult[];
}

export interface GameInfo {
  id: string;
  name: string;
  players: string;
  category: string;
  topics: string[];
  gui_value: string;
  bgg_id: number;
  bgg_rating: number;
}

export interface MatchInfo {
  match: string;
  game: string;
  status: string;
  seats: { name: string | null; ai: boolean; occupied: boolean }[];
}

export type ServerMessage =
  | { type: "welcome"; session: string }
  | { type: "created"; match: string }
  | { type: "joined"; match: string; seat: number | null }
  | { type: "state"; match: string; observation: Observation }
  | { type: "event"; kind: string; detail: Record<string, unknown> }
  | { type: "finished"; match: string; result: SeatResult[] }
  | { type: "error"; code: string; message: string };

export type ClientMessage =
  | { type: "hello"; name: string; proto: number }
  | { type: "create"; game: string; seats: string[]; seed?: number }
  | { type: "join"; match: string; seat?: number; name?: string; spectate?: boolean }
  | { type: "move"; match: string; token: string }
  | { type: "list_games" }
  | { type: "list_matches" }
  | { type: "leave"; match: string };

const SERVER_TYPES = new Set([
  "welcome",
  "created",
  "joined",
  "state",
  "event",
  "finished",
  "error",
]);

export function parseServerMessage(data: string): ServerMessage {
  const doc = JSON.parse(data) as Record<string, unknown>;
  if (typeof doc !== "object" || doc === null || typeof doc.type !== "string") {
    throw new Error("not a protocol message");
  }
  if (!SERVER_TYPES.has(doc.type)) {
    throw new Error(`unknown server message type ${doc.type}`);
  }
  return doc as unknown as ServerMessage;
}

/** Throws when a message would violate the wire schema. */
export function validateOutbound(msg: ClientMessage): void {
  const fail = (why: string) => {
    throw new Error(`invalid ${msg.type} message: ${why}`);
  };
  switch (msg.type) {
    case "hello":
      if (!msg.name) fail("empty name");
      if (msg.proto !== PROTO_VERSION) fail(`proto must be ${PROTO_VERSION}`);
      break;
    case "create":
      if (!msg.game) fail("empty game");
      if (!Array.isArray(msg.seats) || msg.seats.length === 0) fail("no seats");
      if (msg.seats.some((s) => typeof s !== "string" || !s)) fail("bad seat entry");
      if (
        msg.seed !== undefined &&
        (!Number.isInteger(msg.seed) || msg.seed < 0)
      ) {
        fail("seed must be a non-negative integer");
      }
      break;
    case "join":
      if (!msg.match) fail("empty match id");
      if (msg.seat !== undefined && (!Number.isInteger(msg.seat) || msg.seat < 0)) {
        fail("bad seat");
      }
      break;
    case "move":
      if (!msg.match) fail("empty match id");
      if (typeof msg.token !== "string" || !msg.token.trim()) fail("empty token");
      break;
    case "list_games":
    case "list_matches":
      break;
    case "leave":
      if (!msg.match) fail("empty match id");
      break;
  }
}

export function encodeOutbound(msg: ClientMessage): string {
  validateOutbound(msg);
  return JSON.stringify(msg);
}

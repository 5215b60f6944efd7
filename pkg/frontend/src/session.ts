/**
 * Client session state machine. A pure reducer folds server messages into
 * the session; a thin side-effect layer (main.ts) owns the socket. Errors
 * from the server surface as toasts and never reset the session.
 */

import { EMPTY_SELECTION, compose, type Interaction, type Selection } from "./compose.js";
import {
  encodeOutbound,
  type ClientMessage,
  type GameInfo,
  type MatchInfo,
  type Observation,
  type ServerMessage,
} from "./protocol.js";

export interface UiSession {
  phase: "connecting" | "lobby" | "match";
  name: string;
  games: GameInfo[];
  matches: MatchInfo[];
  matchId: string | null;
  seat: number | null;
  observation: Observation | null;
  selection: Selection;
  toast: string | null;
  feed: string[];
}

export function newSession(name: string): UiSession {
  return {
    phase: "connecting",
    name,
    games: [],
    matches: [],
    matchId: null,
    seat: null,
    observation: null,
    selection: EMPTY_SELECTION,
    toast: null,
    feed: [],
  };
}

const FEED_LIMIT = 50;

function withFeed(session: UiSession, line: string): UiSession {
  return { ...session, feed: [...session.feed.slice(-FEED_LIMIT + 1), line] };
}

export function reduce(session: UiSession, msg: ServerMessage): UiSession {
  switch (msg.type) {
    case "welcome":
      return { ...session, phase: "lobby", toast: null };
    case "created":
      return { ...session, phase: "match", matchId: msg.match, selection: EMPTY_SELECTION };
    case "joined":
      return {
        ...session,
        phase: "match",
        matchId: msg.match,
        seat: msg.seat,
        selection: EMPTY_SELECTION,
      };
    case "state": {
      if (session.matchId !== null && msg.match !== session.matchId) return session;
      const seat = msg.observation.viewer ?? session.seat;
      // A new authoritative view always clears any pending composition.
      return {
        ...session,
        observation: msg.observation,
        seat,
        selection: EMPTY_SELECTION,
      };
    }
    case "event": {
      if (msg.kind === "games") {
        return { ...session, games: (msg.detail.games as GameInfo[]) ?? [] };
      }
      if (msg.kind === "matches") {
        return { ...session, matches: (msg.detail.matches as MatchInfo[]) ?? [] };
      }
      return withFeed(session, formatEvent(msg.kind, msg.detail));
    }
    case "finished":
      return withFeed(session, "match finished");
    case "error":
      // Game-level rejections leave the session and view untouched.
      return { ...session, toast: `${msg.code}: ${msg.message}` };
  }
}

function formatEvent(kind: string, detail: Record<string, unknown>): string {
  const parts = Object.entries(detail)
    .filter(([key]) => key !== "match")
    .map(([key, value]) => `${key}=${JSON.stringify(value)}`);
  return `${kind} ${parts.join(" ")}`.trim();
}

/** Handle a board/panel interaction; returns the message to send, if any. */
export function interact(
  session: UiSession,
  action: Interaction,
): { session: UiSession; outbound: ClientMessage | null } {
  const obs = session.observation;
  if (
    session.phase !== "match" ||
    session.matchId === null ||
    obs === null ||
    obs.status !== "in_progress" ||
    obs.legal_moves.length === 0
  ) {
    return { session, outbound: null };
  }
  const result = compose(obs, session.selection, action);
  if (result.kind === "select") {
    return { session: { ...session, selection: result.selection }, outbound: null };
  }
  if (result.kind === "send") {
    // No optimistic update: the view changes only on the next state message.
    return {
      session: { ...session, selection: EMPTY_SELECTION },
      outbound: { type: "move", match: session.matchId, token: result.token },
    };
  }
  return { session, outbound: null };
}

// -- lobby actions -------------------------------------------------------

export function helloMessage(session: UiSession): ClientMessage {
  return { type: "hello", name: session.name, proto: 1 };
}

export function createMessage(game: string, seats: string[]): ClientMessage {
  return { type: "create", game, seats };
}

export function joinMessage(match: string, seat?: number): ClientMessage {
  const msg: ClientMessage = { type: "join", match };
  if (seat !== undefined) msg.seat = seat;
  return msg;
}

export function spectateMessage(match: string): ClientMessage {
  return { type: "join", match, spectate: true };
}

export function serialize(msg: ClientMessage): string {
  return encodeOutbound(msg);
}

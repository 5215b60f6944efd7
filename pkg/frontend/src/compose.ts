/**
 * Click-to-move composition: a pure state machine that turns grid and panel
 * interactions into move tokens. Every produced token is checked for
 * membership in the observation's legal_moves before it may be sent; the
 * client never decides legality itself. The per-game mapping is documented
 * in docs/move-composition.md.
 */

import type { Observation } from "./protocol.js";

export type Interaction =
  | { kind: "cell"; cell: string }
  | { kind: "port"; port: number }
  | { kind: "action"; action: string }
  | { kind: "code"; code: string }
  | { kind: "shape"; shape: "s" | "r" };

export interface Selection {
  cell?: string;
  shape?: "s" | "r";
  guessCells?: string[];
}

export type ComposeResult =
  | { kind: "send"; token: string }
  | { kind: "select"; selection: Selection }
  | { kind: "ignore" };

export const EMPTY_SELECTION: Selection = {};

const send = (token: string): ComposeResult => ({ kind: "send", token });
const select = (selection: Selection): ComposeResult => ({ kind: "select", selection });
const IGNORE: ComposeResult = { kind: "ignore" };

function member(obs: Observation, token: string): boolean {
  return obs.legal_moves.includes(token);
}

/** Guard every send through legal-move membership. */
function sendIfLegal(obs: Observation, token: string): ComposeResult {
  return member(obs, token) ? send(token) : IGNORE;
}

export function compose(
  obs: Observation,
  selection: Selection,
  action: Interaction,
): ComposeResult {
  switch (obs.game_id) {
    case "pig":
    case "nothanks":
      if (action.kind === "action") return sendIfLegal(obs, action.action);
      return IGNORE;
    case "kalah":
      if (action.kind === "action") return sendIfLegal(obs, action.action);
      return IGNORE;
    case "othello":
      if (action.kind === "cell") return sendIfLegal(obs, action.cell);
      if (action.kind === "action") return sendIfLegal(obs, action.action);
      return IGNORE;
    case "mastermind":
      return composeMastermind(obs, action);
    case "blackbox":
      return composeBlackbox(obs, selection, action);
    case "pushfight":
      return composePushfight(obs, selection, action);
    default:
      return IGNORE;
  }
}

function composeMastermind(obs: Observation, action: Interaction): ComposeResult {
  if (action.kind !== "code") return IGNORE;
  if (!/^[1-6]{4}$/.test(action.code)) return IGNORE;
  // The phase decides the verb; both forms are mutually exclusive per state.
  const guess = `guess ${action.code}`;
  const secret = `secret ${action.code}`;
  if (member(obs, guess)) return send(guess);
  return sendIfLegal(obs, secret);
}

function composeBlackbox(
  obs: Observation,
  selection: Selection,
  action: Interaction,
): ComposeResult {
  if (action.kind === "port") return sendIfLegal(obs, `ray ${action.port}`);
  if (action.kind === "cell") {
    const chosen = selection.guessCells ?? [];
    const next = chosen.includes(action.cell)
      ? chosen.filter((c) => c !== action.cell)
      : [...chosen, action.cell];
    if (next.length > 4) return IGNORE;
    return select({ ...selection, guessCells: next });
  }
  if (action.kind === "action" && action.action === "guess") {
    const cells = selection.guessCells ?? [];
    if (cells.length !== 4) return IGNORE;
    const ordered = [...cells].sort(
      (a, b) => cellIndex(a) - cellIndex(b),
    );
    return sendIfLegal(obs, `guess ${ordered.join(" ")}`);
  }
  return IGNORE;
}

function composePushfight(
  obs: Observation,
  selection: Selection,
  action: Interaction,
): ComposeResult {
  const view = obs.public_view as {
    phase?: string;
    board?: Record<string, { seat: number; shape: string }>;
  };
  if (view.phase === "placement") {
    if (action.kind === "shape") return select({ ...selection, shape: action.shape });
    if (action.kind === "cell") {
      const shape = selection.shape ?? "s";
      return sendIfLegal(obs, `place ${shape} ${action.cell}`);
    }
    return IGNORE;
  }
  if (action.kind === "action") {
    if (action.action === "skip") return sendIfLegal(obs, "skip");
    return IGNORE;
  }
  if (action.kind !== "cell") return IGNORE;
  const board = view.board ?? {};
  const mine = obs.viewer !== null && board[action.cell]?.seat === obs.viewer;
  if (selection.cell === undefined) {
    return mine ? select({ cell: action.cell }) : IGNORE;
  }
  if (action.cell === selection.cell) return select(EMPTY_SELECTION); // deselect
  if (mine) return select({ cell: action.cell }); // reselect another piece
  const slide = `move ${selection.cell} ${action.cell}`;
  if (member(obs, slide)) return send(slide);
  const dir = direction(selection.cell, action.cell);
  if (dir !== null) {
    const push = `push ${selection.cell} ${dir}`;
    if (member(obs, push)) return send(push);
  }
  return IGNORE;
}

export function cellIndex(cell: string): number {
  const col = cell.charCodeAt(0) - "a".charCodeAt(0);
  const row = parseInt(cell.slice(1), 10) - 1;
  return row * 8 + col;
}

function direction(from: string, to: string): string | null {
  const dc = to.charCodeAt(0) - from.charCodeAt(0);
  const dr = parseInt(to.slice(1), 10) - parseInt(from.slice(1), 10);
  if (dr === -1 && dc === 0) return "up";
  if (dr === 1 && dc === 0) return "down";
  if (dr === 0 && dc === -1) return "left";
  if (dr === 0 && dc === 1) return "right";
  return null;
}

/** Cells worth highlighting, derived purely from the legal move list. */
export function highlightTargets(obs: Observation, selection: Selection): Set<string> {
  const targets = new Set<string>();
  switch (obs.game_id) {
    case "othello":
      for (const token of obs.legal_moves) {
        if (token !== "pass") targets.add(token);
      }
      break;
    case "blackbox":
      for (const cell of selection.guessCells ?? []) targets.add(cell);
      break;
    case "pushfight":
      if (selection.cell !== undefined) {
        const prefix = `move ${selection.cell} `;
        for (const token of obs.legal_moves) {
          if (token.startsWith(prefix)) targets.add(token.slice(prefix.length));
          const pushPrefix = `push ${selection.cell} `;
          if (token.startsWith(pushPrefix)) {
            const dir = token.slice(pushPrefix.length);
            const neighbor = step(selection.cell, dir);
            if (neighbor !== null) targets.add(neighbor);
          }
        }
      } else {
        for (const token of obs.legal_moves) {
          const parts = token.split(" ");
          if (parts[0] === "move" || parts[0] === "push") targets.add(parts[1]);
          if (parts[0] === "place") targets.add(parts[2]);
        }
      }
      break;
  }
  return targets;
}

function step(cell: string, dir: string): string | null {
  const deltas: Record<string, [number, number]> = {
    up: [-1, 0],
    down: [1, 0],
    left: [0, -1],
    right: [0, 1],
  };
  const delta = deltas[dir];
  if (!delta) return null;
  const col = cell.charCodeAt(0) - 97 + delta[1];
  const row = parseInt(cell.slice(1), 10) - 1 + delta[0];
  if (col < 0 || col > 7 || row < 0 || row > 7) return null;
  return String.fromCharCode(97 + col) + String(row + 1);
}

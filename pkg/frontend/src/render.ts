/**
 * Observation -> view model. Pure and defensive: a malformed observation
 * renders as an error banner instead of throwing, and anything the server
 * filtered out of the observation simply has no corresponding widget.
 */

import { highlightTargets, type Selection } from "./compose.js";
import type { Observation } from "./protocol.js";

export interface CellView {
  cell: string;
  glyph: string;
  highlighted: boolean;
  selected: boolean;
  masked: boolean; // not part of the playable board (push fight notches)
}

export interface GridView {
  kind: "grid";
  rows: number;
  cols: number;
  cells: CellView[];
  ports?: { port: number; label: string }[];
  lines: string[];
  actions: string[];
  banner: string | null;
  history: HistoryRow[];
}

export interface PanelView {
  kind: "panel";
  lines: string[];
  actions: string[];
  banner: string | null;
  history: HistoryRow[];
}

export interface ErrorView {
  kind: "error";
  banner: string;
}

export interface HistoryRow {
  label: string;
  black?: number;
  white?: number;
}

export type ViewModel = GridView | PanelView | ErrorView;

export function render(obs: Observation, selection: Selection = {}): ViewModel {
  try {
    return renderUnchecked(obs, selection);
  } catch (err) {
    return { kind: "error", banner: `cannot render observation: ${String(err)}` };
  }
}

function banner(obs: Observation): string | null {
  if (obs.status !== "finished") return null;
  const rows = obs.result ?? [];
  const winners = rows.filter((r) => r.outcome === "win").map((r) => `seat ${r.seat}`);
  if (winners.length > 0) return `${winners.join(", ")} won`;
  if (rows.length > 0) return "draw";
  return "finished";
}

function actionTokens(obs: Observation): string[] {
  // Single-word tokens become buttons; composite tokens come from clicks.
  return obs.legal_moves.filter((t) => !t.includes(" ")).slice(0, 16);
}

function renderUnchecked(obs: Observation, selection: Selection): ViewModel {
  switch (obs.game_id) {
    case "othello":
      return renderOthello(obs, selection);
    case "pushfight":
      return renderPushfight(obs, selection);
    case "blackbox":
      return renderBlackbox(obs, selection);
    case "mastermind":
      return renderMastermind(obs);
    case "kalah":
      return renderKalah(obs);
    default:
      return renderPanel(obs);
  }
}

function renderOthello(obs: Observation, selection: Selection): GridView {
  const view = obs.public_view as { board: string[]; discs: number[] };
  const highlights = highlightTargets(obs, selection);
  const cells: CellView[] = [];
  for (let r = 0; r < 8; r++) {
    const row = view.board[r] ?? "........";
    for (let c = 0; c < 8; c++) {
      const cell = String.fromCharCode(97 + c) + String(r + 1);
      const piece = row[c] ?? ".";
      cells.push({
        cell,
        glyph: piece === "." ? "" : piece,
        highlighted: highlights.has(cell),
        selected: false,
        masked: false,
      });
    }
  }
  const discs = view.discs ?? [0, 0];
  return {
    kind: "grid",
    rows: 8,
    cols: 8,
    cells,
    lines: [`discs: black ${discs[0]}, white ${discs[1]}`],
    actions: actionTokens(obs),
    banner: banner(obs),
    history: [],
  };
}

const PUSHFIGHT_ROW_COLS: [number, number][] = [
  [2, 5],
  [1, 7],
  [0, 6],
  [2, 5],
];

function renderPushfight(obs: Observation, selection: Selection): GridView {
  const view = obs.public_view as {
    board: Record<string, { seat: number; shape: string }>;
    anchor: string | null;
    phase: string;
    moves_left: number;
    to_place?: number[];
  };
  const highlights = highlightTargets(obs, selection);
  const cells: CellView[] = [];
  for (let r = 0; r < 4; r++) {
    const [lo, hi] = PUSHFIGHT_ROW_COLS[r];
    for (let c = 0; c < 8; c++) {
      const cell = String.fromCharCode(97 + c) + String(r + 1);
      const masked = c < lo || c > hi;
      const piece = view.board?.[cell];
      let glyph = "";
      if (piece) {
        glyph = piece.shape === "s" ? "■" : "●";
        if (piece.seat === 1) glyph = piece.shape === "s" ? "□" : "○";
        if (view.anchor === cell) glyph += "⚓";
      }
      cells.push({
        cell,
        glyph,
        highlighted: !masked && highlights.has(cell),
        selected: selection.cell === cell,
        masked,
      });
    }
  }
  const lines = [`phase: ${view.phase ?? "?"}`, `slides left: ${view.moves_left ?? 0}`];
  return {
    kind: "grid",
    rows: 4,
    cols: 8,
    cells,
    lines,
    actions: actionTokens(obs),
    banner: banner(obs),
    history: [],
  };
}

function renderBlackbox(obs: Observation, selection: Selection): GridView {
  const view = obs.public_view as {
    shots: { port: number; result: string; port_out?: number }[];
    rounds: { seeker: number; atoms: string[]; guess: string[]; score: number }[];
    scores: (number | null)[];
  };
  const highlights = highlightTargets(obs, selection);
  const cells: CellView[] = [];
  for (let r = 0; r < 8; r++) {
    for (let c = 0; c < 8; c++) {
      const cell = String.fromCharCode(97 + c) + String(r + 1);
      cells.push({
        cell,
        glyph: "",
        highlighted: highlights.has(cell),
        selected: (selection.guessCells ?? []).includes(cell),
        masked: false,
      });
    }
  }
  const ports = [];
  for (let p = 1; p <= 32; p++) ports.push({ port: p, label: String(p) });
  const lines = (view.shots ?? []).map((s) =>
    s.port_out !== undefined
      ? `ray ${s.port}: exit ${s.port_out}`
      : `ray ${s.port}: ${s.result}`,
  );
  for (const round of view.rounds ?? []) {
    lines.push(
      `seat ${round.seeker} scored ${round.score} (atoms ${round.atoms.join(" ")})`,
    );
  }
  return {
    kind: "grid",
    rows: 8,
    cols: 8,
    cells,
    ports,
    lines,
    actions: ["guess"],
    banner: banner(obs),
    history: [],
  };
}

function renderMastermind(obs: Observation): PanelView {
  const view = obs.public_view as {
    phase: string;
    guesses: { guess: string; black: number; white: number }[];
    guesses_left: number;
    secret?: string;
  };
  const history: HistoryRow[] = (view.guesses ?? []).map((row) => ({
    label: row.guess,
    black: row.black,
    white: row.white,
  }));
  const lines = [`phase: ${view.phase ?? "?"}`, `guesses left: ${view.guesses_left ?? "?"}`];
  // A secret line exists only when the server actually sent one.
  if (typeof view.secret === "string") lines.push(`secret: ${view.secret}`);
  return {
    kind: "panel",
    lines,
    actions: [],
    banner: banner(obs),
    history,
  };
}

function renderKalah(obs: Observation): PanelView {
  const view = obs.public_view as {
    pits: number[];
    pits_per_side: number;
    stores: number[];
  };
  const n = view.pits_per_side ?? 6;
  const pits = view.pits ?? [];
  const north = [...Array(n)].map((_, i) => pits[2 * n - i] ?? 0).join(" ");
  const south = [...Array(n)].map((_, i) => pits[i] ?? 0).join(" ");
  return {
    kind: "panel",
    lines: [
      `north: ${north} (store ${view.stores?.[1] ?? 0})`,
      `south: ${south} (store ${view.stores?.[0] ?? 0})`,
    ],
    actions: obs.legal_moves.slice(0, 12),
    banner: banner(obs),
    history: [],
  };
}

function renderPanel(obs: Observation): PanelView {
  const lines = Object.entries(obs.public_view ?? {}).map(
    ([key, value]) => `${key}: ${JSON.stringify(value)}`,
  );
  return {
    kind: "panel",
    lines,
    actions: actionTokens(obs),
    banner: banner(obs),
    history: [],
  };
}

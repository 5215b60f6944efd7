import { describe, expect, it } from "vitest";

import { render } from "../src/render.js";
import type { Observation } from "../src/protocol.js";

function obs(partial: Partial<Observation>): Observation {
  return {
    viewer: 0,
    game_id: "othello",
    turn: 0,
    public_view: {},
    legal_moves: [],
    status: "in_progress",
    ...partial,
  };
}

const INITIAL_BOARD = [
  "........",
  "........",
  "........",
  "...WB...",
  "...BW...",
  "........",
  "........",
  "........",
];

describe("othello rendering", () => {
  it("draws 64 cells, 4 discs, 4 highlighted targets", () => {
    const view = render(
      obs({
        public_view: { board: INITIAL_BOARD, discs: [2, 2] },
        legal_moves: ["d3", "c4", "f5", "e6"],
      }),
    );
    if (view.kind !== "grid") throw new Error("expected grid");
    expect(view.cells).toHaveLength(64);
    expect(view.cells.filter((c) => c.glyph !== "")).toHaveLength(4);
    const highlighted = view.cells.filter((c) => c.highlighted).map((c) => c.cell);
    expect(new Set(highlighted)).toEqual(new Set(["d3", "c4", "f5", "e6"]));
  });
});

describe("mastermind rendering", () => {
  it("breaker view has guess rows with pips and no secret line", () => {
    const view = render(
      obs({
        game_id: "mastermind",
        viewer: 1,
        public_view: {
          phase: "guessing",
          guesses: [{ guess: "1122", black: 1, white: 2 }],
          guesses_left: 9,
        },
        legal_moves: ["guess 1111"],
      }),
    );
    if (view.kind !== "panel") throw new Error("expected panel");
    expect(view.history).toEqual([{ label: "1122", black: 1, white: 2 }]);
    expect(view.lines.some((l) => l.startsWith("secret"))).toBe(false);
  });

  it("codemaker view shows the secret the server sent", () => {
    const view = render(
      obs({
        game_id: "mastermind",
        viewer: 0,
        public_view: { phase: "guessing", guesses: [], guesses_left: 10, secret: "3141" },
      }),
    );
    if (view.kind !== "panel") throw new Error("expected panel");
    expect(view.lines).toContain("secret: 3141");
  });
});

describe("finished banners", () => {
  it("names the winning seat", () => {
    const view = render(
      obs({
        game_id: "pig",
        status: "finished",
        public_view: { scores: [101, 55], turn_total: 0, to_move: 0 },
        result: [
          { seat: 0, outcome: "win", score: 101 },
          { seat: 1, outcome: "loss", score: 55 },
        ],
      }),
    );
    expect(view.kind).not.toBe("error");
    if (view.kind === "error") throw new Error("unreachable");
    expect(view.banner).toBe("seat 0 won");
  });
});

describe("render safety", () => {
  const junkViews: Record<string, unknown>[] = [
    {},
    { board: null },
    { board: "not an array", discs: "x" },
    { guesses: [{}], phase: 7 },
    { pits: null, stores: {} },
    { shots: [{}], rounds: [{}] },
    { board: {}, anchor: 9, phase: [] },
  ];

  it("never throws on malformed observations", () => {
    const games = ["othello", "mastermind", "kalah", "blackbox", "pushfight", "pig", "nothanks"];
    for (const game of games) {
      for (const view of junkViews) {
        const out = render(obs({ game_id: game, public_view: view as never }));
        expect(out.kind === "grid" || out.kind === "panel" || out.kind === "error").toBe(true);
      }
    }
  });

  it("hides exactly what the observation lacks", () => {
    const noSecret = render(
      obs({
        game_id: "mastermind",
        public_view: { phase: "guessing", guesses: [], guesses_left: 10 },
      }),
    );
    if (noSecret.kind !== "panel") throw new Error("expected panel");
    expect(JSON.stringify(noSecret)).not.toContain("secret");
  });
});

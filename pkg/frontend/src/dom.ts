/**
 * View-model -> DOM. The only file that touches the document; the board is
 * re-rendered wholesale on every state message (no incremental updates, no
 * optimistic paths).
 */

import type { Interaction } from "./compose.js";
import type { ViewModel } from "./render.js";

export type InteractionHandler = (action: Interaction) => void;

export function drawView(
  root: HTMLElement,
  view: ViewModel,
  onInteract: InteractionHandler,
): void {
  root.textContent = "";
  if (view.kind === "error") {
    root.appendChild(el("div", "banner error", view.banner));
    return;
  }
  if (view.banner) {
    root.appendChild(el("div", "banner", view.banner));
  }
  if (view.kind === "grid") {
    root.appendChild(drawGrid(view, onInteract));
    if (view.ports) {
      root.appendChild(drawPorts(view.ports, onInteract));
    }
  }
  for (const line of view.lines) {
    root.appendChild(el("div", "line", line));
  }
  if (view.history.length > 0) {
    root.appendChild(drawHistory(view.history));
  }
  if (view.actions.length > 0) {
    const bar = el("div", "actions", "");
    for (const action of view.actions) {
      const button = el("button", "action", action) as HTMLButtonElement;
      button.addEventListener("click", () => onInteract({ kind: "action", action }));
      bar.appendChild(button);
    }
    root.appendChild(bar);
  }
}

function drawGrid(
  view: Extract<ViewModel, { kind: "grid" }>,
  onInteract: InteractionHandler,
): HTMLElement {
  const grid = el("div", "board", "");
  grid.style.gridTemplateColumns = `repeat(${view.cols}, 2.2em)`;
  for (const cell of view.cells) {
    const classes = ["cell"];
    if (cell.masked) classes.push("masked");
    if (cell.highlighted) classes.push("highlight");
    if (cell.selected) classes.push("selected");
    const node = el("div", classes.join(" "), cell.glyph);
    node.dataset.cell = cell.cell;
    if (!cell.masked) {
      node.addEventListener("click", () => onInteract({ kind: "cell", cell: cell.cell }));
    }
    grid.appendChild(node);
  }
  return grid;
}

function drawPorts(
  ports: { port: number; label: string }[],
  onInteract: InteractionHandler,
): HTMLElement {
  const bar = el("div", "ports", "");
  for (const { port, label } of ports) {
    const button = el("button", "port", label) as HTMLButtonElement;
    button.addEventListener("click", () => onInteract({ kind: "port", port }));
    bar.appendChild(button);
  }
  return bar;
}

function drawHistory(rows: { label: string; black?: number; white?: number }[]): HTMLElement {
  const list = el("div", "history", "");
  for (const row of rows) {
    const line = el("div", "history-row", "");
    line.appendChild(el("span", "history-label", row.label));
    if (row.black !== undefined && row.white !== undefined) {
      line.appendChild(
        el("span", "pips", "●".repeat(row.black) + "○".repeat(row.white)),
      );
    }
    list.appendChild(line);
  }
  return list;
}

export function el(tag: string, className: string, text: string | null): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text) node.textContent = text;
  return node;
}

/**
 * Browser entry point: one WebSocket, one session, protocol-driven redraws.
 */

import type { Interaction } from "./compose.js";
import { drawView, el } from "./dom.js";
import { parseServerMessage, type ClientMessage } from "./protocol.js";
import { render } from "./render.js";
import {
  createMessage,
  helloMessage,
  interact,
  joinMessage,
  newSession,
  reduce,
  serialize,
  spectateMessage,
  type UiSession,
} from "./session.js";

function query(name: string, fallback: string): string {
  return new URLSearchParams(window.location.search).get(name) ?? fallback;
}

const serverUrl = query("server", `ws://${window.location.hostname || "localhost"}:4001/`);
const playerName = query("name", `player-${Math.floor(Math.random() * 1000)}`);

let session: UiSession = newSession(playerName);
const socket = new WebSocket(serverUrl);

const lobbyRoot = document.getElementById("lobby")!;
const boardRoot = document.getElementById("board")!;
const feedRoot = document.getElementById("feed")!;
const toastRoot = document.getElementById("toast")!;

function sendMessage(msg: ClientMessage): void {
  socket.send(serialize(msg));
}

function onInteract(action: Interaction): void {
  const { session: next, outbound } = interact(session, action);
  session = next;
  if (outbound !== null) {
    sendMessage(outbound);
  } else {
    redraw(); // selection feedback
  }
}

function redraw(): void {
  toastRoot.textContent = session.toast ?? "";
  feedRoot.textContent = session.feed.slice(-8).join("\n");
  if (session.phase === "match" && session.observation !== null) {
    lobbyRoot.style.display = "none";
    boardRoot.style.display = "block";
    drawView(boardRoot as HTMLElement, render(session.observation, session.selection), onInteract);
    return;
  }
  boardRoot.style.display = "none";
  lobbyRoot.style.display = "block";
  drawLobby();
}

function drawLobby(): void {
  lobbyRoot.textContent = "";
  lobbyRoot.appendChild(el("h2", "", "games"));
  for (const game of session.games) {
    const row = el("div", "lobby-row", "");
    row.appendChild(
      el(
        "span",
        "game-name",
        `${game.name} (${game.players} players, ${game.category}, ${game.topics.join("/")})`,
      ),
    );
    const vsAi = el("button", "", "vs AI") as HTMLButtonElement;
    vsAi.addEventListener("click", () => {
      const agent = game.id === "mastermind" ? "knuth" : game.id === "blackbox" ? "random" : "ab:2";
      sendMessage(createMessage(game.id, [playerName, agent]));
    });
    const open = el("button", "", "open match") as HTMLButtonElement;
    open.addEventListener("click", () =>
      sendMessage(createMessage(game.id, [playerName, "anyone"])),
    );
    row.appendChild(vsAi);
    row.appendChild(open);
    lobbyRoot.appendChild(row);
  }
  lobbyRoot.appendChild(el("h2", "", "matches"));
  for (const match of session.matches) {
    const row = el("div", "lobby-row", "");
    const seats = match.seats
      .map((s) => (s.ai ? `[ai ${s.name}]` : s.occupied ? s.name : "(open)"))
      .join(", ");
    row.appendChild(el("span", "", `${match.match} ${match.game} ${match.status} ${seats}`));
    const join = el("button", "", "join") as HTMLButtonElement;
    join.addEventListener("click", () => sendMessage(joinMessage(match.match)));
    const watch = el("button", "", "watch") as HTMLButtonElement;
    watch.addEventListener("click", () => sendMessage(spectateMessage(match.match)));
    row.appendChild(join);
    row.appendChild(watch);
    lobbyRoot.appendChild(row);
  }
  const refresh = el("button", "", "refresh") as HTMLButtonElement;
  refresh.addEventListener("click", () => {
    sendMessage({ type: "list_games" });
    sendMessage({ type: "list_matches" });
  });
  lobbyRoot.appendChild(refresh);
}

socket.addEventListener("open", () => {
  sendMessage(helloMessage(session));
  sendMessage({ type: "list_games" });
  sendMessage({ type: "list_matches" });
});

socket.addEventListener("message", (wire) => {
  try {
    session = reduce(session, parseServerMessage(String(wire.data)));
  } catch (err) {
    session = { ...session, toast: `bad server message: ${String(err)}` };
  }
  redraw();
});

socket.addEventListener("close", () => {
  session = { ...session, toast: "disconnected" };
  redraw();
});

redraw();

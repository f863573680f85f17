// Surveyor console: DOM wiring around the pure api/state/view modules.
// Turn-based, so every action round-trips and re-renders from the fresh
// server snapshot; there is no client-side game state to drift.

import { ApiFailure, Client } from "./api.js";
import { deriveCellStates, statusLine } from "./state.js";
import { gridMarkup, logMarkup, summaryMarkup } from "./view.js";
import type { Cell, ModeSpec, SessionView, StrategyView } from "./types.js";

const client = new Client("");

let session: SessionView | null = null;
let strategy: StrategyView | null = null;
let showRegions = true;
let selected: Cell | null = null; // manual policy: the cell to toss next

const $ = <T extends HTMLElement>(sel: string): T => {
  const el = document.querySelector<T>(sel);
  if (!el) throw new Error(`missing element ${sel}`);
  return el;
};

function renderError(message: string): void {
  $("#error").textContent = message;
}

function render(): void {
  renderError("");
  if (!session) {
    $("#board").innerHTML = "";
    $("#status").textContent = "no session";
    $("#summary").innerHTML = "";
    $("#log").innerHTML = "";
    return;
  }
  const states = deriveCellStates(session, showRegions ? strategy : null);
  const [rows, cols] = session.grid;
  $("#board").innerHTML = gridMarkup(rows, cols, states, showRegions);
  if (selected) {
    const td = document.querySelector(`td[data-cell="${selected[0]},${selected[1]}"]`);
    td?.classList.add("selected");
  }
  $("#status").textContent = statusLine(session);
  $("#summary").innerHTML = summaryMarkup(session);
  $("#log").innerHTML = logMarkup(session);
  const external = modeSpec() === "external";
  const active = session.status === "active";
  const target = session.suggestion ?? selected;
  $("#sank").toggleAttribute("disabled", !(active && external && target));
  $("#stable").toggleAttribute("disabled", !(active && external && target));
  $("#step").toggleAttribute("disabled", !(active && !external && target));
  for (const td of document.querySelectorAll<HTMLTableCellElement>("td.cell")) {
    td.addEventListener("click", () => onCellClick(td.dataset.cell!));
  }
}

function modeSpec(): ModeSpec {
  const kind = $<HTMLSelectElement>("#mode").value;
  if (kind === "external" || kind === "adversarial") return kind;
  if (kind === "empty") return { fixed: { pit: "empty" } };
  if (kind === "fixed") {
    const pit = $<HTMLInputElement>("#pit").value.split(",").map(Number);
    return { fixed: { pit: [pit[0], pit[1]] } };
  }
  return { random: { seed: Number($<HTMLInputElement>("#seed").value) || 0 } };
}

async function resync(): Promise<void> {
  if (!session) return;
  try {
    session = await client.getSession(session.id);
  } catch {
    session = null;
  }
  render();
}

async function act(fn: () => Promise<SessionView>): Promise<void> {
  try {
    session = await fn();
    render();
  } catch (err) {
    if (err instanceof ApiFailure) {
      renderError(err.message);
      await resync(); // e.g. a stale suggestion: take the server's word
    } else {
      renderError(String(err));
    }
  }
}

async function submit(cell: Cell, sank: boolean | null): Promise<void> {
  if (!session) return;
  selected = null;
  await act(() => client.answer(session!.id, cell, sank));
}

function onCellClick(spec: string): void {
  if (!session || session.status !== "active") return;
  const [r, c] = spec.split(",").map(Number);
  const manual = $<HTMLSelectElement>("#policy").value === "manual";
  const suggested =
    session.suggestion && session.suggestion[0] === r && session.suggestion[1] === c;
  if (!manual && !suggested) return; // only the suggestion is clickable
  if (modeSpec() === "external") {
    if (manual) {
      // pick the cell now, report sink / no-sink with the buttons
      selected = [r, c];
      render();
    }
    return;
  }
  void submit([r, c], null);
}

async function newSession(): Promise<void> {
  const rows = Number($<HTMLInputElement>("#rows").value);
  const cols = Number($<HTMLInputElement>("#cols").value);
  const k = Number($<HTMLInputElement>("#stones").value);
  const policy = $<HTMLSelectElement>("#policy").value as
    | "engine" | "algorithm1" | "manual";
  strategy = null;
  try {
    strategy = await client.strategy(rows, cols);
  } catch {
    // grids with both sides above six have no precomputed schedule
  }
  await act(() =>
    client.createSession({ rows, cols, k, mode: modeSpec(), policy }),
  );
}

function target(): Cell | null {
  return session?.suggestion ?? selected;
}

function wire(): void {
  $("#new").addEventListener("click", () => {
    selected = null;
    void newSession();
  });
  $("#sank").addEventListener("click", () => {
    const cell = target();
    if (cell) void submit(cell, true);
  });
  $("#stable").addEventListener("click", () => {
    const cell = target();
    if (cell) void submit(cell, false);
  });
  $("#step").addEventListener("click", () => {
    const cell = target();
    if (cell) void submit(cell, null);
  });
  $("#regions").addEventListener("change", () => {
    showRegions = $<HTMLInputElement>("#regions").checked;
    render();
  });
  render();
}

wire();

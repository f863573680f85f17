// Pure view-state derivation. Everything here reads only the JSON the
// server sent back: the client never re-derives poset logic.

import type { Cell, SessionView, StrategyView } from "./types.js";

// fixed palette, one color per schedule region index (reproducible renders)
export const PALETTE = [
  "#f4a7b9", "#ffe08a", "#b5e550", "#9fd8ef", "#c9b2de",
  "#f6c28b", "#a8e6cf", "#d7ccc8", "#f9f1a5", "#aec6cf",
  "#e2b6cf", "#cde7b0", "#ffd1dc", "#b0c4de", "#e6e6fa",
];

export type CellKind =
  | "cleared"
  | "possible"
  | "queried-positive"
  | "suggested"
  | "identified";

export interface CellState {
  kind: CellKind;
  queryIndex: number | null; // 1-based toss number if this cell was queried
  regionIndex: number | null; // schedule region, when the overlay is on
  strategyIndex: number | null; // 1-based schedule position of this cell
  color: string | null;
}

const key = (cell: Cell) => `${cell[0]},${cell[1]}`;

export function regionOwner(strategy: StrategyView): Map<string, number> {
  const owner = new Map<string, number>();
  strategy.regions.forEach((cells, index) => {
    for (const cell of cells) {
      owner.set(key(cell), index);
    }
  });
  return owner;
}

export function colorFor(regionIndex: number): string {
  return PALETTE[regionIndex % PALETTE.length];
}

/** Classify every cell of the field from the session snapshot alone. */
export function deriveCellStates(
  session: SessionView,
  strategy: StrategyView | null,
): Map<string, CellState> {
  const [rows, cols] = session.grid;
  const cleared = new Set(session.consistent.cleared.map(key));
  const queried = new Map<string, { index: number; sank: boolean }>();
  session.log.forEach(([cell, sank], i) => {
    queried.set(key(cell), { index: i + 1, sank });
  });
  const suggested = session.suggestion ? key(session.suggestion) : null;
  const identified =
    session.identified && session.identified !== "empty"
      ? key(session.identified)
      : null;
  const owner = strategy ? regionOwner(strategy) : null;
  const planned = new Map<string, number>();
  strategy?.queries.forEach((cell, i) => planned.set(key(cell), i + 1));

  const out = new Map<string, CellState>();
  for (let r = 1; r <= rows; r++) {
    for (let c = 1; c <= cols; c++) {
      const k = `${r},${c}`;
      let kind: CellKind;
      if (identified === k) {
        kind = "identified";
      } else if (suggested === k) {
        kind = "suggested";
      } else if (queried.get(k)?.sank) {
        kind = "queried-positive";
      } else if (cleared.has(k)) {
        kind = "cleared";
      } else {
        kind = "possible";
      }
      const region = owner?.get(k);
      out.set(k, {
        kind,
        queryIndex: queried.get(k)?.index ?? null,
        regionIndex: region ?? null,
        strategyIndex: planned.get(k) ?? null,
        color: region === undefined ? null : colorFor(region),
      });
    }
  }
  return out;
}

/** Cells the UI greys out: known safe, i.e. cleared of suspicion. */
export function greyedCells(states: Map<string, CellState>): Set<string> {
  const out = new Set<string>();
  for (const [k, st] of states) {
    if (st.kind === "cleared") {
      out.add(k);
    }
  }
  return out;
}

export function statusLine(session: SessionView): string {
  if (session.status === "identified") {
    return session.identified === "empty"
      ? "no quicksand in the field"
      : `pit corner at (${(session.identified as Cell).join(", ")})`;
  }
  if (session.status === "stranded") {
    return "stranded: no stones left with candidates remaining";
  }
  const sugg = session.suggestion;
  return sugg
    ? `toss ${session.log.length + 1}: suggestion (${sugg.join(", ")})`
    : `toss ${session.log.length + 1}: pick any untried cell`;
}

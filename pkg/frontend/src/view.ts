// HTML builders. Pure string functions so they stay testable off-DOM;
// main.ts owns the actual DOM writes and event wiring.

import type { CellState } from "./state.js";
import type { SessionView } from "./types.js";

const CIRCLED = "⓪①②③④⑤⑥⑦⑧⑨⑩⑪⑫⑬⑭⑮⑯⑰⑱⑲⑳";

export function circled(n: number): string {
  return n >= 0 && n <= 20 ? CIRCLED[n] : `(${n})`;
}

function cellMarkup(
  r: number,
  c: number,
  st: CellState,
  showRegions: boolean,
): string {
  const classes = ["cell", st.kind];
  let style = "";
  if (showRegions && st.color) {
    style = ` style="background:${st.color}"`;
    classes.push("region");
  }
  let label = "";
  if (st.queryIndex !== null) {
    label = circled(st.queryIndex);
  } else if (st.kind === "suggested") {
    label = "?";
  } else if (showRegions && st.strategyIndex !== null) {
    label = circled(st.strategyIndex);
  }
  return (
    `<td class="${classes.join(" ")}" data-cell="${r},${c}"${style}>` +
    `${label}</td>`
  );
}

/** Grid table, row `rows` printed first so row 1 sits at the bottom. */
export function gridMarkup(
  rows: number,
  cols: number,
  states: Map<string, CellState>,
  showRegions: boolean,
): string {
  const lines: string[] = ['<table class="field">'];
  for (let r = rows; r >= 1; r--) {
    const tds: string[] = [];
    for (let c = 1; c <= cols; c++) {
      const st = states.get(`${r},${c}`);
      if (!st) continue;
      tds.push(cellMarkup(r, c, st, showRegions));
    }
    lines.push(`<tr>${tds.join("")}</tr>`);
  }
  lines.push("</table>");
  return lines.join("\n");
}

export function logMarkup(session: SessionView): string {
  const items = session.log
    .map(
      ([cell, sank], i) =>
        `<li>${circled(i + 1)} (${cell[0]}, ${cell[1]}): ` +
        `${sank ? "<b>sank</b>" : "stable"}</li>`,
    )
    .join("");
  return `<ol class="log">${items}</ol>`;
}

export function summaryMarkup(session: SessionView): string {
  const banner =
    session.status === "identified" && session.identified === "empty"
      ? '<div class="banner ok">no quicksand</div>'
      : "";
  return (
    banner +
    `<span class="stones">stones left: ${session.k_remaining}/${session.k}</span>` +
    ` · <span class="candidates">candidates: ${session.consistent.count}</span>`
  );
}

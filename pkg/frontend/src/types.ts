// Wire types, mirroring the service's JSON schemas exactly.

export type Cell = [number, number]; // [row, col], 1-based, row 1 at the bottom

export interface ConsistentSummary {
  count: number;
  cleared: Cell[];
}

export type SessionStatus = "active" | "identified" | "stranded";

export interface SessionView {
  id: string;
  grid: [number, number];
  k: number;
  k_remaining: number;
  log: [Cell, boolean][];
  status: SessionStatus;
  identified: "empty" | Cell | null;
  suggestion: Cell | null;
  consistent: ConsistentSummary;
}

export interface StrategyView {
  grid: [number, number];
  queries: Cell[];
  regions: Cell[][];
  q2: number;
}

export interface ValueView {
  rows: number;
  cols: number;
  k: number;
  value: number;
  lower_bound: number;
}

export interface ApiError {
  code: "BAD_INPUT" | "NO_SESSION" | "CONTRADICTION" | "OUT_OF_RANGE";
  message: string;
}

export type ModeSpec =
  | "adversarial"
  | "external"
  | { fixed: { pit: "empty" | Cell } }
  | { random: { seed: number } };

export interface SessionCreate {
  rows: number;
  cols: number;
  k: number;
  mode: ModeSpec;
  policy: "engine" | "algorithm1" | "manual";
}

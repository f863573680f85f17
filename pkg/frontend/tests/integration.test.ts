// Scripted external-mode game against the real HTTP service: the console's
// own client and state modules drive a 5x7 survey with the pit at (4, 3).

import assert from "node:assert/strict";
import { spawn, type ChildProcess } from "node:child_process";
import { after, before, test } from "node:test";

import { Client } from "../src/api.js";
import { deriveCellStates, greyedCells, regionOwner } from "../src/state.js";
import type { Cell, SessionView } from "../src/types.js";

const PORT = 8937;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | null = null;

async function waitForHealth(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/api/health`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("service did not come up");
}

before(async () => {
  server = spawn(
    "python3",
    ["-m", "quicksand.cli", "serve", "--bind", `127.0.0.1:${PORT}`],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForHealth();
});

after(() => {
  server?.kill();
});

const pit: Cell = [4, 3];
const sinks = (cell: Cell) => pit[0] >= cell[0] && pit[1] >= cell[1];

test("external 5x7 survey with pit (4,3) finishes within 8 tosses", async () => {
  const client = new Client(BASE);
  const strategy = await client.strategy(5, 7);
  assert.equal(strategy.q2, 8);
  const owner = regionOwner(strategy);

  let session: SessionView = await client.createSession({
    rows: 5, cols: 7, k: 2, mode: "external", policy: "algorithm1",
  });
  assert.deepEqual(session.suggestion, [4, 4]);

  const rendered: Cell[] = [];
  const serverTranscript: Cell[] = [];
  while (session.status === "active") {
    const suggestion = session.suggestion as Cell;
    assert.ok(suggestion, "active session must carry a suggestion");
    // what the console renders as the suggested cell is the server's field
    const states = deriveCellStates(session, strategy);
    const sugKey = `${suggestion[0]},${suggestion[1]}`;
    assert.equal(states.get(sugKey)?.kind, "suggested");
    rendered.push(suggestion);
    serverTranscript.push(suggestion);
    session = await client.answer(session.id, suggestion, sinks(suggestion));

    // greyed cells come verbatim from the server's cleared list
    const after = deriveCellStates(session, strategy);
    const grey = greyedCells(after);
    const reported = new Set(
      session.consistent.cleared.map(([r, c]) => `${r},${c}`),
    );
    for (const k of reported) {
      const st = after.get(k)!;
      assert.ok(
        st.kind === "cleared" || st.kind === "queried-positive"
          || st.kind === "suggested" || st.kind === "identified",
      );
    }
    for (const k of grey) {
      assert.ok(reported.has(k));
    }
  }

  assert.equal(session.status, "identified");
  assert.deepEqual(session.identified, [4, 3]);
  assert.ok(session.log.length <= 8, `took ${session.log.length} tosses`);
  assert.deepEqual(rendered, serverTranscript);
  assert.deepEqual(
    session.log.map(([cell]) => cell),
    serverTranscript,
  );

  // region coloring: every schedule query cell belongs to its own region
  strategy.queries.forEach((q, i) => {
    assert.equal(owner.get(`${q[0]},${q[1]}`), i);
  });

  await client.deleteSession(session.id);
});

test("stale or off-script cells are rejected and the client re-syncs", async () => {
  const client = new Client(BASE);
  let session = await client.createSession({
    rows: 3, cols: 3, k: 2, mode: "external", policy: "algorithm1",
  });
  await assert.rejects(
    () => client.answer(session.id, [9, 9] as Cell, false),
    /BAD_INPUT/,
  );
  // re-sync: the server state is unchanged
  const fresh = await client.getSession(session.id);
  assert.equal(fresh.log.length, 0);
  assert.deepEqual(fresh.suggestion, session.suggestion);
  await client.deleteSession(session.id);
});

// Thin REST client. Every state change round-trips; no optimistic updates.

import type {
  ApiError,
  Cell,
  SessionCreate,
  SessionView,
  StrategyView,
  ValueView,
} from "./types.js";

export class ApiFailure extends Error {
  constructor(public status: number, public body: ApiError) {
    super(`${body.code}: ${body.message}`);
  }
}

async function request<T>(
  base: string,
  path: string,
  init?: RequestInit,
): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (res.status === 204) {
    return undefined as T;
  }
  const body = await res.json();
  if (!res.ok) {
    throw new ApiFailure(res.status, body as ApiError);
  }
  return body as T;
}

export class Client {
  constructor(public base: string = "") {}

  createSession(spec: SessionCreate): Promise<SessionView> {
    return request(this.base, "/api/session", {
      method: "POST",
      body: JSON.stringify(spec),
    });
  }

  getSession(id: string): Promise<SessionView> {
    return request(this.base, `/api/session/${id}`);
  }

  answer(id: string, cell: Cell, sank: boolean | null): Promise<SessionView> {
    return request(this.base, `/api/session/${id}/answer`, {
      method: "POST",
      body: JSON.stringify(sank === null ? { cell } : { cell, sank }),
    });
  }

  deleteSession(id: string): Promise<void> {
    return request(this.base, `/api/session/${id}`, { method: "DELETE" });
  }

  strategy(rows: number, cols: number): Promise<StrategyView> {
    return request(this.base, `/api/strategy?rows=${rows}&cols=${cols}`);
  }

  value(rows: number, cols: number, k: number): Promise<ValueView> {
    return request(this.base, `/api/value?rows=${rows}&cols=${cols}&k=${k}`);
  }
}

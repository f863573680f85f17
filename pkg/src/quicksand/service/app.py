"""HTTP/JSON service: compute endpoints plus the turn-based session API.

All session mutation goes through the game module; the handlers only
translate between JSON and session state, so API transcripts replayed
against the game module reproduce identical states.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import engine, gridalg, strategy
from ..game import (ContradictionError, GameError, HiddenMode, Session,
                    new_session)
from ..poset import make_grid
from .models import (AnswerBody, SessionCreate, SessionView, StrategyView,
                     ValueView)
from .store import SessionStore


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _mode_from_spec(spec) -> HiddenMode:
    if isinstance(spec, str):
        return HiddenMode.adversarial() if spec == "adversarial" else HiddenMode.external()
    kind, payload = next(iter(spec.items()))
    if kind == "random":
        return HiddenMode.random(payload["seed"])
    pit = payload.get("pit") if isinstance(payload, dict) else payload
    if pit == "empty":
        return HiddenMode.fixed(None)
    return HiddenMode.fixed((int(pit[0]), int(pit[1])))


def _session_view(sid: str, session: Session) -> dict:
    data = session.to_json()
    data["id"] = sid
    return data


def create_app(assets_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="quicksand", docs_url=None, redoc_url=None)
    store = SessionStore()
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def _bad_input(_req: Request, exc: RequestValidationError):
        return _error(400, "BAD_INPUT", str(exc.errors()[:1]))

    @app.exception_handler(GameError)
    async def _game_error(_req: Request, exc: GameError):
        if isinstance(exc, ContradictionError):
            return _error(409, "CONTRADICTION", str(exc))
        return _error(400, "BAD_INPUT", str(exc))

    @app.exception_handler(gridalg.GridRangeError)
    async def _range_error(_req: Request, exc: gridalg.GridRangeError):
        return _error(400, "OUT_OF_RANGE", str(exc))

    @app.get("/api/health")
    async def health():
        return {"ok": True, "sessions": len(store)}

    @app.get("/api/value", response_model=ValueView)
    async def value(rows: int, cols: int, k: int = 2):
        if rows < 1 or cols < 1 or k < 1:
            return _error(400, "BAD_INPUT", "rows, cols and k must be >= 1")
        from ..numerics import tau
        if k == 1:
            val = rows * cols
        elif k == 2 and min(rows, cols) <= 6:
            val = gridalg.grid_q2(rows, cols)
        elif rows * cols <= 48:
            val = engine.qk_value(make_grid(rows, cols), k)
        else:
            return _error(400, "OUT_OF_RANGE",
                          "grid too large for exact search at this k")
        return ValueView(rows=rows, cols=cols, k=k, value=val,
                         lower_bound=tau(k, rows * cols))

    @app.get("/api/strategy", response_model=StrategyView)
    async def strategy_endpoint(rows: int, cols: int):
        seq = gridalg.solve_grid(rows, cols)
        regs = strategy.regions(make_grid(rows, cols), seq)
        cost = strategy.q2_cost(make_grid(rows, cols), seq)
        return StrategyView(
            grid=(rows, cols),
            queries=[tuple(q) for q in seq],
            regions=[sorted(reg) for reg in regs],
            q2=cost,
        )

    @app.post("/api/session", response_model=SessionView, status_code=201)
    async def create_session(body: SessionCreate):
        mode = _mode_from_spec(body.mode)
        session = new_session(body.rows, body.cols, body.k, mode, body.policy)
        sid = store.add(session)
        return _session_view(sid, session)

    @app.get("/api/session/{sid}", response_model=SessionView)
    async def get_session(sid: str):
        session = store.get(sid)
        if session is None:
            return _error(404, "NO_SESSION", f"no session {sid!r}")
        return _session_view(sid, session)

    @app.post("/api/session/{sid}/answer", response_model=SessionView)
    async def answer(sid: str, body: AnswerBody):
        session = store.get(sid)
        if session is None:
            return _error(404, "NO_SESSION", f"no session {sid!r}")
        lock = store.lock(sid)
        with lock:
            session.submit((body.cell[0], body.cell[1]), body.sank)
        return _session_view(sid, session)

    @app.delete("/api/session/{sid}", status_code=204)
    async def delete_session(sid: str):
        if not store.remove(sid):
            return _error(404, "NO_SESSION", f"no session {sid!r}")
        return None

    assets = assets_dir or os.environ.get("QS_ASSETS")
    if assets and Path(assets).is_dir():
        app.mount("/", StaticFiles(directory=assets, html=True), name="ui")

    return app

"""In-memory session store with per-session write serialization."""
from __future__ import annotations

import secrets
import threading
from typing import Iterator, Optional

from ..game import Session


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def add(self, session: Session) -> str:
        sid = secrets.token_urlsafe(9)
        with self._guard:
            self._sessions[sid] = session
            self._locks[sid] = threading.Lock()
        return sid

    def get(self, sid: str) -> Optional[Session]:
        return self._sessions.get(sid)

    def lock(self, sid: str) -> Optional[threading.Lock]:
        return self._locks.get(sid)

    def remove(self, sid: str) -> bool:
        with self._guard:
            self._locks.pop(sid, None)
            return self._sessions.pop(sid, None) is not None

    def __len__(self) -> int:
        return len(self._sessions)

    def ids(self) -> Iterator[str]:
        return iter(list(self._sessions))

"""Request and response schemas for the HTTP service."""
from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator


class ApiError(BaseModel):
    code: Literal["BAD_INPUT", "NO_SESSION", "CONTRADICTION", "OUT_OF_RANGE"]
    message: str


class SessionCreate(BaseModel):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    k: int = Field(default=2, ge=1)
    mode: Union[str, dict[str, Any]] = "external"
    policy: Literal["engine", "algorithm1", "manual"] = "algorithm1"

    @field_validator("mode")
    @classmethod
    def _check_mode(cls, v):
        if isinstance(v, str):
            if v not in ("adversarial", "external"):
                raise ValueError(f"unknown mode {v!r}")
            return v
        if len(v) != 1:
            raise ValueError("mode object must have exactly one key")
        kind, payload = next(iter(v.items()))
        if kind == "fixed":
            pit = payload.get("pit") if isinstance(payload, dict) else payload
            if pit != "empty" and not (
                isinstance(pit, (list, tuple)) and len(pit) == 2
            ):
                raise ValueError('fixed mode wants "empty" or a [row, col] pit')
        elif kind == "random":
            if not isinstance(payload, dict) or not isinstance(payload.get("seed"), int):
                raise ValueError('random mode wants {"seed": <int>}')
        else:
            raise ValueError(f"unknown mode {kind!r}")
        return v


class AnswerBody(BaseModel):
    cell: tuple[int, int]
    sank: Optional[bool] = None


class ConsistentView(BaseModel):
    count: int
    cleared: list[list[int]]


class SessionView(BaseModel):
    id: str
    grid: tuple[int, int]
    k: int
    k_remaining: int
    log: list[tuple[tuple[int, int], bool]]
    status: Literal["active", "identified", "stranded"]
    identified: Optional[Union[Literal["empty"], tuple[int, int]]]
    suggestion: Optional[tuple[int, int]]
    consistent: ConsistentView


class StrategyView(BaseModel):
    grid: tuple[int, int]
    queries: list[tuple[int, int]]
    regions: list[list[tuple[int, int]]]
    q2: int


class ValueView(BaseModel):
    rows: int
    cols: int
    k: int
    value: int
    lower_bound: int

"""Explicit optimal first-stone schedules for grids with a side of at most 6.

The generator walks a loop: orient the remaining rectangle so rows <= cols,
pick the case template matching (rows, t) where t is the threshold
tau_2(cells), emit the template's queries, cut their up-sets away, repeat.
Each template stores per-query row-count vectors (bottom row first) as
integer formulas in t (and n); queries claim right-aligned blocks, so the
remainder is again a corner rectangle.  Decoded queries are re-validated
against the stored counts, which catches transcription slips mechanically.

Two templates marked ``repair=True`` were added: the printed case table
skips the 2x2 rectangle (the odd-t two-row template needs three columns)
and the 4x14 rectangle (the t=11 template needs fifteen columns).  Both
repairs satisfy the same per-step conditions as the originals and are
exercised by the sweep like any other case.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .numerics import binomial_sum, tau
from .poset import Cell, StaircaseShape, make_grid
from .strategy import q2_cost, regions


class GridAlgorithmError(Exception):
    pass


class NoCaseError(GridAlgorithmError):
    """No template guard matched; must be impossible in the supported range."""


class DecodingMismatchError(GridAlgorithmError):
    """Recomputed regions differ from the template counts."""


class GridRangeError(GridAlgorithmError):
    """Grid outside the supported family (both sides above 6)."""


class RectangularityError(GridAlgorithmError):
    """A loop iteration left a non-rectangular remainder."""


def _div(num: int, den: int) -> int:
    if num % den:
        raise DecodingMismatchError(f"row count {num}/{den} is not an integer")
    return num // den


@dataclass(frozen=True)
class CaseTemplate:
    step: int
    case_id: str
    label: str
    guard: Callable[[int, int], bool]            # (n, t) -> bool
    counts: Optional[Callable[[int, int], list[list[int]]]] = None
    explicit: Optional[Callable[[int, int], list[Cell]]] = None
    repair: bool = False
    skip_conditions: bool = False                # the 6x6 special case

    @property
    def rows(self) -> int:
        return self.step - 1


# ---------------------------------------------------------------------------
# the case table
# ---------------------------------------------------------------------------

def _step2() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            2, "s2.any", "single row",
            guard=lambda n, t: True,
            counts=lambda n, t: [[t]],
        ),
    ]


def _step3() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            3, "s3.n2", "n=2 (repair)",
            guard=lambda n, t: n == 2,
            counts=lambda n, t: [[1, 1]],
            repair=True,
        ),
        CaseTemplate(
            3, "s3.even", "t=0 (mod 2)",
            guard=lambda n, t: t % 2 == 0,
            counts=lambda n, t: [[t // 2, t // 2]],
        ),
        CaseTemplate(
            3, "s3.odd", "t=1 (mod 2)",
            guard=lambda n, t: t % 2 == 1,
            counts=lambda n, t: [
                [0, t],
                [t - 1, 0],
                [_div(t - 1, 2), _div(t - 3, 2)],
            ],
        ),
    ]


def _step4() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            4, "s4.t5", "t=5",
            guard=lambda n, t: t == 5,
            counts=lambda n, t: [[0, 0, n]],
        ),
        CaseTemplate(
            4, "s4.mod3r01", "t=0,1 (mod 3)",
            guard=lambda n, t: t % 3 in (0, 1),
            counts=lambda n, t: [[t // 3] * 3],
        ),
        CaseTemplate(
            4, "s4.mod6r2", "t=2 (mod 6)",
            guard=lambda n, t: t % 6 == 2,
            counts=lambda n, t: [
                [0, _div(t, 2), _div(t, 2)],
                [_div(2 * t - 1, 3), _div(t - 2, 6), _div(t - 2, 6)],
            ],
        ),
        CaseTemplate(
            4, "s4.mod6r5", "11<=t=5 (mod 6)",
            guard=lambda n, t: t % 6 == 5 and t >= 11,
            counts=lambda n, t: [
                [0, 0, t],
                [0, t - 1, 0],
                [0, _div(t - 1, 2), _div(t - 3, 2)],
                [t - 3, 0, 0],
                [_div(2 * t - 1, 3), _div(t - 11, 6), _div(t - 11, 6)],
            ],
        ),
    ]


def _step5() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            5, "s5.t67", "t=6,7",
            guard=lambda n, t: t in (6, 7),
            counts=lambda n, t: [[0, 0, 0, n]],
        ),
        CaseTemplate(
            5, "s5.t11n14", "t=11, n=14 (repair)",
            guard=lambda n, t: t == 11 and n == 14,
            counts=lambda n, t: [
                [0, 0, 0, 11],
                [0, 0, 10, 0],
                [0, 9, 0, 0],
                [8, 0, 0, 0],
                [0, 3, 2, 1],
                [4, 0, 0, 0],
                [0, 0, 2, 2],
                [2, 2, 0, 0],
            ],
            repair=True,
        ),
        CaseTemplate(
            5, "s5.t11", "t=11",
            guard=lambda n, t: t == 11,
            counts=lambda n, t: [
                [0, 0, 0, 11],
                [0, 0, 10, 0],
                [0, 0, 5, 4],
                [0, 8, 0, 0],
                [0, 7, 0, 0],
                [6, 0, 0, 0],
                [5, 0, 0, 0],
                [4, 0, 0, 0],
            ],
        ),
        CaseTemplate(
            5, "s5.mod4r01", "t=0,1 (mod 4)",
            guard=lambda n, t: t % 4 in (0, 1),
            counts=lambda n, t: [[t // 4] * 4],
        ),
        CaseTemplate(
            5, "s5.mod4r2", "10<=t=2 (mod 4)",
            guard=lambda n, t: t % 4 == 2 and t >= 10,
            counts=lambda n, t: [
                [0, 0, 0, t],
                [0, 0, t - 1, 0],
                [0, t - 2, 0, 0],
                [t - 3, 0, 0, 0],
                [_div(t + 2, 4), _div(t - 2, 4), _div(t - 6, 4), _div(t - 10, 4)],
            ],
        ),
        CaseTemplate(
            5, "s5.mod12r3", "t=3 (mod 12)",
            guard=lambda n, t: t % 12 == 3,
            counts=lambda n, t: [
                [0, 0, 0, t],
                [0, 0, t - 1, 0],
                [0, t - 2, 0, 0],
                [0, _div(t, 3), _div(t - 3, 3), _div(t - 6, 3)],
                [t - 4, 0, 0, 0],
                [0, 0, _div(t - 5, 2), _div(t - 5, 2)],
                [_div(2 * t - 6, 3), _div(t - 12, 3), 0, 0],
                [_div(t - 3, 3), _div(t - 3, 3), _div(t - 15, 6), _div(t - 15, 6)],
            ],
        ),
        CaseTemplate(
            5, "s5.mod12r7", "19<=t=7 (mod 12)",
            guard=lambda n, t: t % 12 == 7 and t >= 19,
            counts=lambda n, t: [
                [0, 0, 0, t],
                [0, 0, t - 1, 0],
                [0, t - 2, 0, 0],
                [t - 3, 0, 0, 0],
                [0, _div(t - 1, 3), _div(t - 4, 3), _div(t - 7, 3)],
                [0, 0, _div(t - 5, 2), _div(t - 5, 2)],
                [_div(2 * t - 8, 3), _div(t - 10, 3), 0, 0],
                [_div(t - 4, 3), _div(t - 4, 3), _div(t - 13, 6), _div(t - 13, 6)],
            ],
        ),
        CaseTemplate(
            5, "s5.mod12r11", "23<=t=11 (mod 12)",
            guard=lambda n, t: t % 12 == 11 and t >= 23,
            counts=lambda n, t: [
                [0, 0, 0, t],
                [0, 0, t - 1, 0],
                [0, 0, _div(t - 1, 2), _div(t - 3, 2)],
                [0, t - 3, 0, 0],
                [0, _div(2 * t - 1, 3), _div(t - 11, 6), _div(t - 11, 6)],
                [t - 5, 0, 0, 0],
                [_div(3 * t - 1, 4), _div(t - 23, 12), _div(t - 23, 12), _div(t - 23, 12)],
            ],
        ),
    ]


def _step6() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            6, "s6.t9", "t=9",
            guard=lambda n, t: t == 9,
            counts=lambda n, t: [[0, 0, 0, 0, n]],
        ),
        CaseTemplate(
            6, "s6.t14", "t=14",
            guard=lambda n, t: t == 14,
            counts=lambda n, t: [
                [0, 0, 0, 7, 7],
                [0, 0, 9, 2, 2],
                [6, 6, 0, 0, 0],
                [0, 5, 2, 2, 2],
                [6, 1, 1, 1, 1],
            ],
        ),
        CaseTemplate(
            6, "s6.mod5r012", "t=0,1,2 (mod 5)",
            guard=lambda n, t: t % 5 in (0, 1, 2),
            counts=lambda n, t: [[t // 5] * 5],
        ),
        CaseTemplate(
            6, "s6.mod10r3", "t=3 (mod 10)",
            guard=lambda n, t: t % 10 == 3,
            counts=lambda n, t: [
                [0, 0, 0, _div(t - 1, 2), _div(t - 1, 2)],
                [0, _div(t - 1, 2), _div(t - 1, 2), 0, 0],
                [_div(3 * t - 4, 5)] + [_div(t - 3, 10)] * 4,
            ],
        ),
        CaseTemplate(
            6, "s6.mod10r8", "t=8 (mod 10)",
            guard=lambda n, t: t % 10 == 8,
            counts=lambda n, t: [
                [0, 0, 0, _div(t, 2), _div(t, 2)],
                [0, _div(t - 2, 2), _div(t - 2, 2), 0, 0],
                [_div(3 * t - 4, 5), _div(t + 2, 10), _div(t + 2, 10),
                 _div(t - 8, 10), _div(t - 8, 10)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r4", "34<=t=4 (mod 30)",
            guard=lambda n, t: t % 30 == 4 and t >= 34,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [0, t - 3, 0, 0, 0],
                [t - 4, 0, 0, 0, 0],
                [0, 0, 0, _div(t - 4, 2), _div(t - 6, 2)],
                [0, 0, _div(2 * t - 8, 3), _div(t - 10, 6), _div(t - 10, 6)],
                [_div(t - 6, 2), _div(t - 8, 2), 0, 0, 0],
                [_div(3 * t - 2, 10), _div(3 * t - 2, 10),
                 _div(2 * t - 38, 15), _div(2 * t - 38, 15), _div(2 * t - 38, 15)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r9", "39<=t=9 (mod 30)",
            guard=lambda n, t: t % 30 == 9 and t >= 39,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [_div(t - 3, 2), _div(t - 3, 2), 0, 0, 0],
                [0, 0, 0, _div(t - 3, 2), _div(t - 5, 2)],
                [0, 0, _div(2 * t - 6, 3), _div(t - 9, 6), _div(t - 9, 6)],
                [0, t - 6, 0, 0, 0],
                [t - 7, 0, 0, 0, 0],
                [_div(3 * t + 13, 10), _div(3 * t + 3, 10),
                 _div(2 * t - 48, 15), _div(2 * t - 48, 15), _div(2 * t - 48, 15)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r14", "44<=t=14 (mod 30)",
            guard=lambda n, t: t % 30 == 14 and t >= 44,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [0, 0, 0, _div(t - 2, 2), _div(t - 4, 2)],
                [0, 0, _div(2 * t - 4, 3), _div(t - 8, 6), _div(t - 8, 6)],
                [0, t - 5, 0, 0, 0],
                [t - 6, 0, 0, 0, 0],
                [_div(t - 6, 2), _div(t - 8, 2), 0, 0, 0],
                [_div(3 * t + 18, 10), _div(3 * t + 18, 10),
                 _div(2 * t - 58, 15), _div(2 * t - 58, 15), _div(2 * t - 58, 15)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r19", "t=19 (mod 30)",
            guard=lambda n, t: t % 30 == 19,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [0, t - 3, 0, 0, 0],
                [0, 0, 0, _div(t - 3, 2), _div(t - 5, 2)],
                [t - 5, 0, 0, 0, 0],
                [_div(t - 1, 3), _div(t - 7, 3), _div(t - 10, 3), 0, 0],
                [0, _div(t - 1, 3), _div(t - 1, 3), _div(t - 19, 6), _div(t - 19, 6)],
                [_div(7 * t - 28, 15), _div(2 * t - 23, 15), _div(2 * t - 23, 15),
                 _div(2 * t - 23, 15), _div(2 * t - 23, 15)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r24", "t=24 (mod 30)",
            guard=lambda n, t: t % 30 == 24,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [0, 0, _div(t, 3), _div(t - 3, 3), _div(t - 6, 3)],
                [0, t - 4, 0, 0, 0],
                [t - 5, 0, 0, 0, 0],
                [0, 0, _div(t - 6, 3), _div(t - 6, 3), _div(t - 6, 3)],
                [_div(t - 6, 2), _div(t - 8, 2), 0, 0, 0],
                [_div(3 * t + 8, 10), _div(3 * t + 8, 10),
                 _div(2 * t - 48, 15), _div(2 * t - 48, 15), _div(2 * t - 48, 15)],
            ],
        ),
        CaseTemplate(
            6, "s6.mod30r29", "t=29 (mod 30)",
            guard=lambda n, t: t % 30 == 29,
            counts=lambda n, t: [
                [0, 0, 0, 0, t],
                [0, 0, 0, t - 1, 0],
                [0, 0, t - 2, 0, 0],
                [0, t - 3, 0, 0, 0],
                [0, 0, 0, _div(t - 3, 2), _div(t - 5, 2)],
                [t - 5, 0, 0, 0, 0],
                [0, 0, _div(2 * t - 7, 3), _div(t - 11, 6), _div(t - 11, 6)],
                [_div(t - 5, 2), _div(t - 9, 2), 0, 0, 0],
                [_div(3 * t + 3, 10), _div(3 * t + 3, 10),
                 _div(2 * t - 43, 15), _div(2 * t - 43, 15), _div(2 * t - 43, 15)],
            ],
        ),
    ]


_SIX_BY_SIX = ((5, 3), (4, 2), (2, 4), (3, 1), (1, 4), (2, 1), (1, 2), (1, 1))

_SIX_BY_TWENTY = (
    (6, 6), (5, 7), (4, 8), (3, 9), (5, 1), (1, 16), (3, 4), (1, 12),
    (2, 5), (3, 1), (1, 7), (2, 1), (1, 4), (1, 2), (1, 1),
)


def _step7() -> list[CaseTemplate]:
    return [
        CaseTemplate(
            7, "s7.n6", "n=6",
            guard=lambda n, t: n == 6,
            explicit=lambda n, t: list(_SIX_BY_SIX),
            skip_conditions=True,
        ),
        CaseTemplate(
            7, "s7.n7to11", "7<=n<=11",
            guard=lambda n, t: 7 <= n <= 11,
            counts=lambda n, t: [[0, 0, 0, 0, 0, n]],
        ),
        CaseTemplate(
            7, "s7.nlist", "n in {16..19,23,24} or t=0,1 (mod 6)",
            guard=lambda n, t: n in (16, 17, 18, 19, 23, 24) or t % 6 in (0, 1),
            counts=lambda n, t: [[t // 6] * 6],
        ),
        CaseTemplate(
            7, "s7.mod6r4", "16<=t=4 (mod 6)",
            guard=lambda n, t: t % 6 == 4 and t >= 16,
            counts=lambda n, t: [
                [0, 0, 0, _div(t - 1, 3), _div(t - 1, 3), _div(t - 1, 3)],
                [_div(t - 1, 3), _div(t - 1, 3), _div(t - 1, 3), 0, 0, 0],
            ],
        ),
        CaseTemplate(
            7, "s7.n20", "n=20",
            guard=lambda n, t: n == 20,
            explicit=lambda n, t: list(_SIX_BY_TWENTY),
        ),
        CaseTemplate(
            7, "s7.mod6r3", "21<=t=3 (mod 6)",
            guard=lambda n, t: t % 6 == 3 and t >= 21,
            counts=lambda n, t: [
                [0, 0, 0, _div(t, 3), _div(t, 3), _div(t, 3)],
                [0, 0, 0, 0, _div(t - 1, 2), _div(t - 1, 2)],
                [0, 0, 0, _div(2 * t - 3, 3), _div(t - 3, 6), _div(t - 3, 6)],
                [0, 0, t - 3, 0, 0, 0],
                [0, t - 4, 0, 0, 0, 0],
                [t - 5, 0, 0, 0, 0, 0],
                [_div(t + 9, 6), _div(t + 3, 6), _div(t - 3, 6),
                 _div(t - 15, 6), _div(t - 15, 6), _div(t - 15, 6)],
            ],
        ),
        CaseTemplate(
            7, "s7.mod12r2", "26<=t=2 (mod 12)",
            guard=lambda n, t: t % 12 == 2 and t >= 26,
            counts=lambda n, t: [
                [0, 0, 0, 0, 0, t],
                [0, 0, 0, 0, t - 1, 0],
                [0, 0, 0, t - 2, 0, 0],
                [0, 0, t - 3, 0, 0, 0],
                [0, 0, _div(t + 2, 4), _div(t - 2, 4), _div(t - 6, 4), _div(t - 10, 4)],
                [0, t - 5, 0, 0, 0, 0],
                [t - 6, 0, 0, 0, 0, 0],
                [_div(t + 4, 3), _div(t + 1, 3), _div(t - 26, 12), _div(t - 26, 12),
                 _div(t - 26, 12), _div(t - 26, 12)],
            ],
        ),
        CaseTemplate(
            7, "s7.mod12r5", "17<=t=5 (mod 12), n>=25",
            guard=lambda n, t: t % 12 == 5 and t >= 17 and n >= 25,
            counts=lambda n, t: [
                [0, 0, 0, 0, 0, t],
                [0, 0, 0, 0, t - 1, 0],
                [0, 0, 0, t - 2, 0, 0],
                [0, _div(t - 3, 2), _div(t - 3, 2), 0, 0, 0],
                [_div(2 * t - 7, 3), _div(t - 5, 6), _div(t - 5, 6), 0, 0, 0],
                [_div(t - 5, 3), _div(t - 5, 3), _div(t - 5, 3), 0, 0, 0],
                [0, 0, _div(t + 3, 4), _div(t - 5, 4), _div(t - 9, 4), _div(t - 13, 4)],
                [_div(t - 2, 3), _div(t - 2, 3), _div(t - 17, 12), _div(t - 17, 12),
                 _div(t - 17, 12), _div(t - 17, 12)],
            ],
        ),
        CaseTemplate(
            7, "s7.mod12r8", "20<=t=8 (mod 12)",
            guard=lambda n, t: t % 12 == 8 and t >= 20,
            counts=lambda n, t: [
                [0, 0, 0, 0, 0, t],
                [0, 0, 0, 0, t - 1, 0],
                [0, 0, 0, t - 2, 0, 0],
                [0, 0, t - 3, 0, 0, 0],
                [0, t - 4, 0, 0, 0, 0],
                [t - 5, 0, 0, 0, 0, 0],
                [0, 0, _div(t, 4), _div(t - 4, 4), _div(t - 8, 4), _div(t - 12, 4)],
                [_div(t + 1, 3), _div(t - 2, 3), _div(t - 20, 12), _div(t - 20, 12),
                 _div(t - 20, 12), _div(t - 20, 12)],
            ],
        ),
        CaseTemplate(
            7, "s7.mod12r11", "23<=t=11 (mod 12)",
            guard=lambda n, t: t % 12 == 11 and t >= 23,
            counts=lambda n, t: [
                [0, 0, 0, 0, 0, t],
                [0, 0, 0, 0, t - 1, 0],
                [0, 0, 0, t - 2, 0, 0],
                [0, 0, t - 3, 0, 0, 0],
                [0, t - 4, 0, 0, 0, 0],
                [0, 0, _div(t + 1, 4), _div(t - 3, 4), _div(t - 7, 4), _div(t - 11, 4)],
                [t - 6, 0, 0, 0, 0, 0],
                [_div(t + 4, 3), _div(t - 2, 3), _div(t - 23, 12), _div(t - 23, 12),
                 _div(t - 23, 12), _div(t - 23, 12)],
            ],
        ),
    ]


TEMPLATES: dict[int, list[CaseTemplate]] = {
    2: _step2(), 3: _step3(), 4: _step4(), 5: _step5(), 6: _step6(), 7: _step7(),
}


def all_templates() -> list[CaseTemplate]:
    return [t for step in sorted(TEMPLATES) for t in TEMPLATES[step]]


# ---------------------------------------------------------------------------
# dispatch / instantiate / the loop
# ---------------------------------------------------------------------------

def dispatch(m: int, n: int) -> CaseTemplate:
    """The first template whose guard matches (m, n, t); m <= n, m <= 6."""
    if not (1 <= m <= 6):
        raise GridRangeError(f"row count {m} outside 1..6")
    if n < m:
        raise GridRangeError("dispatch expects rows <= cols; flip first")
    t = tau(2, m * n)
    for tmpl in TEMPLATES[m + 1]:
        if tmpl.guard(n, t):
            return tmpl
    raise NoCaseError(f"no case for m={m}, n={n}, t={t}")


def matching_templates(m: int, n: int) -> list[CaseTemplate]:
    t = tau(2, m * n)
    return [tmpl for tmpl in TEMPLATES[m + 1] if tmpl.guard(n, t)]


def instantiate(template: CaseTemplate, shape: StaircaseShape, t: int) -> list[Cell]:
    """Decode a template on a rectangle into concrete queries and verify it."""
    if not shape.is_rectangle() or shape.is_empty():
        raise RectangularityError(f"template applied to non-rectangle {shape}")
    m, n = shape.rows, shape.cols
    if m != template.rows:
        raise DecodingMismatchError(
            f"template {template.case_id} is for {template.rows} rows, shape has {m}"
        )
    if template.explicit is not None:
        seq = template.explicit(n, t)
        regs = regions(shape, seq)
        if any(not reg for reg in regs):
            raise DecodingMismatchError(f"{template.case_id}: empty region")
        return seq
    count_table = template.counts(n, t)
    cum = [0] * m
    seq: list[Cell] = []
    for qi, vec in enumerate(count_table, start=1):
        if len(vec) != m:
            raise DecodingMismatchError(f"{template.case_id}: bad row vector")
        if any(c < 0 for c in vec):
            raise DecodingMismatchError(
                f"{template.case_id}: negative count in query {qi}"
            )
        if not any(vec):
            raise DecodingMismatchError(f"{template.case_id}: empty query {qi}")
        low = next(r for r in range(1, m + 1) if vec[r - 1] > 0)
        for r in range(m):
            cum[r] += vec[r]
            if cum[r] > n:
                raise DecodingMismatchError(
                    f"{template.case_id}: row {r + 1} overflows width {n}"
                )
        seq.append((low, n - cum[low - 1] + 1))
    regs = regions(shape, seq)
    for qi, (vec, reg) in enumerate(zip(count_table, regs), start=1):
        got = [0] * m
        for r, _c in reg:
            got[r - 1] += 1
        if got != vec:
            raise DecodingMismatchError(
                f"{template.case_id}: query {qi} decoded rows {got} != counts {vec}"
            )
    return seq


@dataclass
class LoopStep:
    """One pass through the template loop, for verification and reporting."""
    shape: StaircaseShape          # oriented rows <= cols
    flipped: bool
    template: CaseTemplate
    t: int
    queries: list[Cell]            # in the orientation of `shape`
    queries_abs: list[Cell]        # in the original grid's orientation


def solve_grid_steps(m: int, n: int) -> list[LoopStep]:
    if m < 1 or n < 1:
        raise GridRangeError("grid sides must be >= 1")
    if min(m, n) > 6:
        raise GridRangeError("one side must be at most 6")
    steps: list[LoopStep] = []
    rows, cols = m, n
    while rows > 0 and cols > 0:
        flip = rows > cols
        wm, wn = (cols, rows) if flip else (rows, cols)
        t = tau(2, wm * wn)
        tmpl = dispatch(wm, wn)
        shape = make_grid(wm, wn)
        v = instantiate(tmpl, shape, t)
        v_abs = [(c, r) for r, c in v] if flip else list(v)
        steps.append(LoopStep(shape, flip, tmpl, t, list(v), v_abs))
        leftover = shape.not_above_seq(v)
        if not leftover.is_rectangle():
            raise RectangularityError(
                f"non-rectangular remainder {leftover} after {tmpl.case_id}"
            )
        wrows, wcols = leftover.rows, leftover.cols
        rows, cols = (wcols, wrows) if flip else (wrows, wcols)
    return steps


def solve_grid(m: int, n: int) -> list[Cell]:
    """A full strategy for the m x n grid attaining grid_q2(m, n)."""
    out: list[Cell] = []
    for step in solve_grid_steps(m, n):
        out.extend(step.queries_abs)
    return out


def grid_q2(m: int, n: int) -> int:
    """9 for the 6x6 grid, tau_2(mn) for every other supported grid."""
    if m < 1 or n < 1:
        raise GridRangeError("grid sides must be >= 1")
    if min(m, n) > 6:
        raise GridRangeError(
            "both sides exceed 6; use the generic engine for this grid"
        )
    if m == 6 and n == 6:
        return 9
    return tau(2, m * n)


@dataclass
class ConditionReport:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_conditions(shape: StaircaseShape, v: list[Cell], t: int) -> ConditionReport:
    """The three per-iteration proof conditions for a template's queries.

    C1: worst-case cost of the partial sequence stays within t.
    C2: covered + T_2(t) - |shape| >= s*t - T_2(s-1).
    C3: the remainder is not the 6x6 rectangle.
    """
    regs = regions(shape, v)
    s = len(v)
    if any(not reg for reg in regs):
        return ConditionReport(False, "empty region")
    if q2_cost(shape, v) > t:
        return ConditionReport(False, "C1")
    covered = sum(len(reg) for reg in regs)
    if covered + binomial_sum(2, t) - shape.size < s * t - binomial_sum(2, s - 1):
        return ConditionReport(False, "C2")
    leftover = shape.not_above_seq(v)
    if leftover.widths == (6,) * 6:
        return ConditionReport(False, "C3")
    return ConditionReport(True)

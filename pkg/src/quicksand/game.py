"""Quicksand puzzle sessions: hidden pit, stone tosses, knowledge tracking.

A session plays the search game on an m x n field.  The hidden pit is an
ideal of the grid: empty, or everything southwest of some generator cell.
Each toss reports sink / no-sink; at most k sinks are allowed in total.
The session keeps the set of ideals still consistent with the log, a
remaining-sink budget, and (for the non-manual policies) a cursor into the
policy it is executing.

Answer modes: a fixed pit, a seeded random pit, an adversary that keeps
answers consistent while maximizing the executing policy's remaining
worst-case cost (ties break to "no sink"), or external answers supplied by
a human surveyor.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .engine import Descent, Leaf, Node, Tree, decision_tree
from .gridalg import solve_grid
from .poset import Cell, make_grid
from .strategy import regions

# an ideal is empty (None) or the principal ideal of a generator cell
Ideal = Optional[Cell]

MODE_FIXED = "fixed"
MODE_RANDOM = "random"
MODE_ADVERSARIAL = "adversarial"
MODE_EXTERNAL = "external"

POLICY_ENGINE = "engine"
POLICY_ALGORITHM1 = "algorithm1"
POLICY_MANUAL = "manual"


class GameError(Exception):
    pass


class ContradictionError(GameError):
    """External answers ruled out every ideal."""


def ideal_contains(ideal: Ideal, cell: Cell) -> bool:
    if ideal is None:
        return False
    return ideal[0] >= cell[0] and ideal[1] >= cell[1]


def all_ideals(m: int, n: int) -> list[Ideal]:
    return [None] + [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]


@dataclass
class HiddenMode:
    kind: str
    pit: Ideal = None          # fixed mode
    seed: int | None = None    # random mode

    @classmethod
    def fixed(cls, pit: Ideal) -> "HiddenMode":
        return cls(MODE_FIXED, pit=pit)

    @classmethod
    def random(cls, seed: int) -> "HiddenMode":
        return cls(MODE_RANDOM, seed=seed)

    @classmethod
    def adversarial(cls) -> "HiddenMode":
        return cls(MODE_ADVERSARIAL)

    @classmethod
    def external(cls) -> "HiddenMode":
        return cls(MODE_EXTERNAL)


class _EnginePolicy:
    """Follows the adaptive decision tree."""

    def __init__(self, m: int, n: int, k: int):
        self.cursor: Tree = decision_tree(make_grid(m, n), k)
        self.descent_pos = 0

    def suggestion(self) -> Optional[Cell]:
        node = self.cursor
        if isinstance(node, Leaf):
            return None
        if isinstance(node, Descent):
            if self.descent_pos >= len(node.order):
                return None
            return node.order[self.descent_pos]
        return node.query

    def advance(self, sank: bool) -> None:
        node = self.cursor
        if isinstance(node, Descent):
            if sank:
                self.cursor = Leaf()
            else:
                self.descent_pos += 1
            return
        assert isinstance(node, Node)
        self.cursor = node.on_positive if sank else node.on_negative
        self.descent_pos = 0

    def worst_remaining(self, sank: bool) -> int:
        node = self.cursor
        if isinstance(node, Descent):
            if sank:
                return 0
            return len(node.order) - self.descent_pos - 1
        assert isinstance(node, Node)
        return (node.on_positive if sank else node.on_negative).cost()


class _AlgorithmOnePolicy:
    """Follows the precomputed first-stone schedule, then sweeps the region."""

    def __init__(self, m: int, n: int):
        self.seq = solve_grid(m, n)
        self.regs = regions(make_grid(m, n), self.seq)
        self.phase = "first"
        self.index = 0
        self.descent: list[Cell] = []
        self.descent_pos = 0

    def suggestion(self) -> Optional[Cell]:
        if self.phase == "first":
            if self.index >= len(self.seq):
                return None
            return self.seq[self.index]
        if self.descent_pos >= len(self.descent):
            return None
        return self.descent[self.descent_pos]

    def advance(self, sank: bool) -> None:
        if self.phase == "first":
            if sank:
                region = self.regs[self.index] - {self.seq[self.index]}
                self.descent = sorted(region, reverse=True)
                self.descent_pos = 0
                self.phase = "descent"
            else:
                self.index += 1
            return
        if sank:
            self.phase = "done"
        else:
            self.descent_pos += 1

    def worst_remaining(self, sank: bool) -> int:
        if self.phase == "first":
            if sank:
                return len(self.regs[self.index]) - 1
            best = len(self.seq) - self.index - 1
            for j in range(self.index + 1, len(self.seq)):
                best = max(best, len(self.regs[j]) + (j - self.index - 1))
            return best
        if sank:
            return 0
        return len(self.descent) - self.descent_pos - 1


@dataclass
class Session:
    rows: int
    cols: int
    k_total: int
    mode: HiddenMode
    policy_name: str
    k_remaining: int = 0
    log: list[tuple[Cell, bool]] = field(default_factory=list)
    consistent: set[Ideal] = field(default_factory=set)
    hidden: Ideal = None
    _policy: object = None

    # -- state summaries --------------------------------------------------

    @property
    def status(self) -> str:
        if len(self.consistent) == 1:
            return "identified"
        if self.k_remaining == 0:
            return "stranded"
        return "active"

    @property
    def identified(self) -> Ideal:
        if len(self.consistent) != 1:
            raise GameError("session has not identified the pit yet")
        return next(iter(self.consistent))

    def suggestion(self) -> Optional[Cell]:
        if self.status != "active":
            return None
        if self._policy is None:
            return None
        return self._policy.suggestion()

    def queried(self, cell: Cell) -> bool:
        return any(c == cell for c, _ in self.log)

    def cleared_cells(self) -> set[Cell]:
        """Cells contained in no consistent ideal (known safe)."""
        out = set()
        for r in range(1, self.rows + 1):
            for c in range(1, self.cols + 1):
                if not any(ideal_contains(i, (r, c)) for i in self.consistent):
                    out.add((r, c))
        return out

    def recompute_consistent(self) -> set[Ideal]:
        """The consistent set rebuilt from scratch from the log."""
        out = set()
        for ideal in all_ideals(self.rows, self.cols):
            if all(ideal_contains(ideal, c) == s for c, s in self.log):
                out.add(ideal)
        return out

    # -- play --------------------------------------------------------------

    def _answer_for(self, cell: Cell, supplied: Optional[bool]) -> bool:
        kind = self.mode.kind
        if kind in (MODE_FIXED, MODE_RANDOM):
            return ideal_contains(self.hidden, cell)
        if kind == MODE_EXTERNAL:
            if supplied is None:
                raise GameError("external mode needs an explicit sank flag")
            return bool(supplied)
        # adversarial: stay consistent, maximize the policy's remaining cost
        yes_ok = any(ideal_contains(i, cell) for i in self.consistent)
        no_ok = any(not ideal_contains(i, cell) for i in self.consistent)
        if not yes_ok:
            return False
        if not no_ok:
            return True
        if self._policy is not None and self._policy.suggestion() == cell:
            if self._policy.worst_remaining(True) > self._policy.worst_remaining(False):
                return True
            return False
        # no policy to fight: keep the most candidates alive, ties negative
        yes_count = sum(1 for i in self.consistent if ideal_contains(i, cell))
        return yes_count > len(self.consistent) - yes_count

    def submit(self, cell: Cell, sank: Optional[bool] = None) -> bool:
        """Toss a stone at `cell`; returns the (possibly generated) answer."""
        if self.status != "active":
            raise GameError(f"session is {self.status}")
        if not (1 <= cell[0] <= self.rows and 1 <= cell[1] <= self.cols):
            raise GameError(f"cell {cell} outside the {self.rows}x{self.cols} field")
        if self.queried(cell):
            raise GameError(f"cell {cell} was already queried")
        if self._policy is not None:
            want = self._policy.suggestion()
            if want is not None and cell != want:
                raise GameError(
                    f"policy session expects the suggestion {want}, got {cell}"
                )
        answer = self._answer_for(cell, sank)
        new_consistent = {
            i for i in self.consistent if ideal_contains(i, cell) == answer
        }
        if not new_consistent:
            raise ContradictionError(
                f"answer {answer} at {cell} is inconsistent with every ideal"
            )
        self.consistent = new_consistent
        self.log.append((cell, answer))
        if answer:
            self.k_remaining -= 1
        if self._policy is not None:
            self._policy.advance(answer)
        return answer

    def to_json(self) -> dict:
        ident = None
        if len(self.consistent) == 1:
            only = next(iter(self.consistent))
            ident = "empty" if only is None else [only[0], only[1]]
        sugg = self.suggestion()
        return {
            "grid": [self.rows, self.cols],
            "k": self.k_total,
            "k_remaining": self.k_remaining,
            "log": [[[c[0], c[1]], bool(s)] for c, s in self.log],
            "status": self.status,
            "identified": ident,
            "suggestion": None if sugg is None else [sugg[0], sugg[1]],
            "consistent": {
                "count": len(self.consistent),
                "cleared": sorted([r, c] for r, c in self.cleared_cells()),
            },
        }


def new_session(m: int, n: int, k: int, mode: HiddenMode, policy: str) -> Session:
    if m < 1 or n < 1:
        raise GameError("field dimensions must be >= 1")
    if k < 1:
        raise GameError("at least one stone is required")
    if policy not in (POLICY_ENGINE, POLICY_ALGORITHM1, POLICY_MANUAL):
        raise GameError(f"unknown policy {policy!r}")
    hidden: Ideal = None
    if mode.kind == MODE_FIXED:
        if mode.pit is not None and not (1 <= mode.pit[0] <= m and 1 <= mode.pit[1] <= n):
            raise GameError(f"pit {mode.pit} outside the field")
        hidden = mode.pit
    elif mode.kind == MODE_RANDOM:
        if mode.seed is None:
            raise GameError("random mode requires a seed")
        hidden = random.Random(mode.seed).choice(all_ideals(m, n))
    elif mode.kind not in (MODE_ADVERSARIAL, MODE_EXTERNAL):
        raise GameError(f"unknown mode {mode.kind!r}")
    if policy == POLICY_ENGINE:
        pol = _EnginePolicy(m, n, k)
    elif policy == POLICY_ALGORITHM1:
        if k != 2:
            raise GameError("the explicit schedule policy is for k = 2 only")
        pol = _AlgorithmOnePolicy(m, n)
    else:
        pol = None
    session = Session(
        rows=m, cols=n, k_total=k, mode=mode, policy_name=policy,
        k_remaining=k, consistent=set(all_ideals(m, n)), hidden=hidden,
        _policy=pol,
    )
    return session


def replay(m: int, n: int, k: int, hidden: Ideal, policy: str) -> int:
    """Run a fixed-pit session to identification; returns the query count."""
    session = new_session(m, n, k, HiddenMode.fixed(hidden), policy)
    while session.status == "active":
        cell = session.suggestion()
        if cell is None:
            raise GameError("policy offered no suggestion on an active session")
        session.submit(cell)
    if session.status != "identified":
        raise GameError(f"replay ended {session.status}")
    if session.identified != hidden:
        raise GameError(
            f"replay identified {session.identified} but the pit was {hidden}"
        )
    return len(session.log)

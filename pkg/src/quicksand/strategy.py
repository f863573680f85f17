"""First-stone calculus for the two-positives game.

A sequence u = (u_1, ..., u_r) partitions the covered part of the poset
into regions: region t holds everything above u_t but above no earlier
u_i.  The sequence is a full strategy when the regions are all nonempty
and cover the poset.  Its worst-case query count is
max_t |region_t| + t - 1: after a positive at toss t the remaining region
is swept one cell at a time.  The minimum of that cost over all strategies
equals the two-positive search value, which is what `optimal_q2` exploits.
"""
from __future__ import annotations

from typing import Sequence, Union

from .engine import qk_value
from .numerics import tau
from .poset import Cell, FinitePoset, StaircaseShape

PosetLike = Union[StaircaseShape, FinitePoset]


def regions(lam: PosetLike, seq: Sequence) -> list[set]:
    """Region t = (up-set of u_t) minus the up-sets of u_1..u_{t-1}."""
    out: list[set] = []
    if isinstance(lam, StaircaseShape):
        covered: set[Cell] = set()
        for u in seq:
            if u not in lam:
                raise ValueError(f"query {u} outside the poset")
            r, c = u
            up = {
                (rr, cc)
                for rr in range(r, lam.rows + 1)
                for cc in range(c, lam.widths[rr - 1] + 1)
            }
            out.append(up - covered)
            covered |= up
        return out
    covered_mask = 0
    for u in seq:
        if not lam.mask & (1 << u):
            raise ValueError(f"query {u} outside the poset")
        up = lam.up[u] & lam.mask
        out.append(set_bits(up & ~covered_mask))
        covered_mask |= up
    return out


def set_bits(mask: int) -> set[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _distinct(seq: Sequence) -> bool:
    return len(set(seq)) == len(seq)


def is_strategy(lam: PosetLike, seq: Sequence) -> bool:
    """True iff the up-sets of seq cover lam and every region is nonempty."""
    if not _distinct(seq):
        return False
    try:
        regs = regions(lam, seq)
    except ValueError:
        return False
    if any(not reg for reg in regs):
        return False
    return sum(len(reg) for reg in regs) == lam.size


def q2_cost(lam: PosetLike, seq: Sequence) -> int:
    """max_t |region_t| + t - 1."""
    if not seq:
        raise ValueError("cost of the empty sequence is undefined")
    regs = regions(lam, seq)
    return max(len(reg) + t for t, reg in enumerate(regs))


# ---------------------------------------------------------------------------
# search over strategies
# ---------------------------------------------------------------------------

def _shape_candidates(shape: StaircaseShape):
    for u in shape.cells():
        yield u, shape.upset_size(u)


def _shape_canon(shape: StaircaseShape) -> tuple[int, ...]:
    return shape.canonical().widths


def _witness_shape(shape: StaircaseShape, budget: int, t: int,
                   acc: list, dead: set) -> bool:
    if shape.is_empty():
        return True
    cap = budget - t + 1
    if cap < 1 or tau(2, shape.size) > budget - t + 1:
        return False
    key = (_shape_canon(shape), cap)
    if key in dead:
        return False
    for u, up in sorted(_shape_candidates(shape), key=lambda p: p[0]):
        if up > cap:
            continue
        acc.append(u)
        if _witness_shape(shape.not_above(u), budget, t + 1, acc, dead):
            return True
        acc.pop()
    dead.add(key)
    return False


def _witness_poset(p: FinitePoset, mask: int, budget: int, t: int,
                   acc: list, dead: set) -> bool:
    if mask == 0:
        return True
    cap = budget - t + 1
    size = mask.bit_count()
    if cap < 1 or tau(2, size) > budget - t + 1:
        return False
    if (mask, cap) in dead:
        return False
    for u in sorted(set_bits(mask)):
        up = p.up[u] & mask
        if up.bit_count() > cap:
            continue
        acc.append(u)
        if _witness_poset(p, mask & ~up, budget, t + 1, acc, dead):
            return True
        acc.pop()
    dead.add((mask, cap))
    return False


def optimal_q2(lam: PosetLike):
    """(value, witness): value = qk_value(lam, 2), witness attains it."""
    size = lam.size
    if size == 0:
        raise ValueError("empty poset has no strategy")
    value = qk_value(lam, 2)
    acc: list = []
    if isinstance(lam, StaircaseShape):
        found = _witness_shape(lam, value, 1, acc, set())
    else:
        found = _witness_poset(lam, lam.mask, value, 1, acc, set())
    assert found, "no strategy found at the computed optimum"
    return value, tuple(acc)


def count_strategies(lam: PosetLike, target: int, mode: str = "exact") -> int:
    """Number of strategies u with cost == target (exact) or <= target (atmost).

    Sequences are ordered tuples: two strategies differ if any position
    differs; transposes are not identified.
    """
    if target < 1:
        raise ValueError("target must be >= 1")
    if mode not in ("exact", "atmost"):
        raise ValueError(f"unknown mode {mode!r}")
    if lam.size == 0:
        return 0
    if mode == "atmost":
        return _count_atmost(lam, target)
    below = _count_atmost(lam, target - 1) if target > 1 else 0
    return _count_atmost(lam, target) - below


def _count_atmost(lam: PosetLike, budget: int) -> int:
    if isinstance(lam, StaircaseShape):
        memo: dict = {}

        def go(shape: StaircaseShape, t: int) -> int:
            if shape.is_empty():
                return 1
            cap = budget - t + 1
            if cap < 1 or tau(2, shape.size) > budget - t + 1:
                return 0
            key = (_shape_canon(shape), cap)
            got = memo.get(key)
            if got is not None:
                return got
            total = 0
            for u, up in _shape_candidates(shape):
                if up <= cap:
                    total += go(shape.not_above(u), t + 1)
            memo[key] = total
            return total

        return go(lam, 1)

    p = lam
    memo2: dict = {}

    def go2(mask: int, t: int) -> int:
        if mask == 0:
            return 1
        cap = budget - t + 1
        if cap < 1 or tau(2, mask.bit_count()) > budget - t + 1:
            return 0
        got = memo2.get((mask, cap))
        if got is not None:
            return got
        total = 0
        for u in set_bits(mask):
            up = p.up[u] & mask
            if up.bit_count() <= cap:
                total += go2(mask & ~up, t + 1)
        memo2[(mask, cap)] = total
        return total

    return go2(p.mask, 1)


def non_increasing_order(lam: PosetLike) -> list:
    """All elements in a valid non-increasing arrangement."""
    if isinstance(lam, StaircaseShape):
        return sorted(lam.cells(), reverse=True)
    return list(reversed(lam.sorted_elements()))

"""Shared test helpers: slow reference implementations used as oracles.

The slow versions work straight off the definitions with no canonical
forms, no closed families and no short-circuits, so they stay independent
of the optimized paths they are checking.
"""
from __future__ import annotations

import random
from functools import lru_cache

from quicksand.poset import FinitePoset, StaircaseShape


def slow_qk(poset: FinitePoset, k: int) -> int:
    """Reference recursion on explicit masks, straight off the definition."""

    @lru_cache(maxsize=None)
    def go(mask: int, kk: int) -> int:
        if mask == 0:
            return 0
        if kk == 1:
            return mask.bit_count()
        best = None
        m = mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            up = poset.up[u] & mask
            cand = max(go(mask & ~up, kk), go(up & ~(1 << u), kk - 1)) + 1
            if best is None or cand < best:
                best = cand
        return best

    return go(poset.mask, k)


def brute_regions(cells: list, geq, seq: list) -> list[set]:
    """Set-algebra regions over an explicit cell list and comparison fn."""
    out, covered = [], set()
    for u in seq:
        up = {v for v in cells if geq(v, u)}
        out.append(up - covered)
        covered |= up
    return out


def grid_geq(a, b) -> bool:
    return a[0] >= b[0] and a[1] >= b[1]


def brute_strategies(cells: list, geq, budget: int):
    """Every ordered strategy with worst-case cost <= budget, by brute force."""
    results = []

    def go(remaining: frozenset, t: int, acc: list):
        if not remaining:
            results.append(tuple(acc))
            return
        for u in sorted(remaining):
            region = {v for v in remaining if geq(v, u)}
            if len(region) + t - 1 <= budget:
                acc.append(u)
                go(remaining - region, t + 1, acc)
                acc.pop()

    go(frozenset(cells), 1, [])
    return results


def random_poset(rng: random.Random, n: int, p: float = 0.3) -> FinitePoset:
    """Random order via a random DAG on 0..n-1 plus transitive closure."""
    pairs = [
        (j, i) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return FinitePoset.from_pairs(n, pairs)


def random_shape(rng: random.Random, max_rows: int = 6, max_width: int = 8) -> StaircaseShape:
    rows = rng.randint(0, max_rows)
    widths, cur = [], max_width
    for _ in range(rows):
        cur = rng.randint(0, cur)
        widths.append(cur)
    return StaircaseShape(sorted(widths, reverse=True))

"""Exact minimum worst-case query counts and the policies realizing them.

The central recursion: searching a nonempty poset with k > 1 positives
allowed costs 1 + min over first queries u of max(cost of the query being
negative, which leaves everything not above u with k positives, and cost
of it being positive, which leaves the part strictly above u with k - 1).
With k = 1 the only safe play is to sweep the whole poset in some
non-increasing order, so the cost is the size.

Grids are memoized on canonical staircase states; the positive branch
produces "staircase minus its bottom-left corner" states, which the same
family covers via a missing-corner flag.  Totally ordered posets get the
classic interval DP.  Small general posets run on bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .numerics import binomial_sum, tau
from .poset import Cell, FinitePoset, StaircaseShape

PosetLike = Union[StaircaseShape, FinitePoset]

_INF = float("inf")


class EngineError(ValueError):
    pass


# ---------------------------------------------------------------------------
# grid states: (widths, missing bottom-left corner?)
# ---------------------------------------------------------------------------

GridState = tuple[tuple[int, ...], bool]


def _grid_state(shape: StaircaseShape, missing: bool = False) -> GridState:
    if missing and not shape.widths:
        raise ValueError("cannot remove the corner of an empty shape")
    if missing and shape.size == 1:
        return ((), False)
    return (shape.widths, missing)


def _state_size(state: GridState) -> int:
    widths, missing = state
    return sum(widths) - (1 if missing else 0)


def _state_cells(state: GridState):
    widths, missing = state
    for r, w in enumerate(widths, start=1):
        for c in range(1, w + 1):
            if missing and r == 1 and c == 1:
                continue
            yield (r, c)


_CONJ: dict[tuple[int, ...], tuple[int, ...]] = {}


def _conjugate(widths: tuple[int, ...]) -> tuple[int, ...]:
    got = _CONJ.get(widths)
    if got is None:
        got = tuple(
            sum(1 for w in widths if w >= k)
            for k in range(1, (widths[0] + 1) if widths else 1)
        )
        _CONJ[widths] = got
    return got


def _canon_state(state: GridState) -> GridState:
    widths, missing = state
    if missing and len(widths) == 1:
        # a single row missing its first cell is just a shorter chain
        return ((widths[0] - 1,), False) if widths[0] > 1 else ((), False)
    if missing and widths[0] == 1:
        return ((len(widths) - 1,), False) if len(widths) > 1 else ((), False)
    conj = _conjugate(widths)
    return (min(widths, conj), missing)


def _state_not_above(state: GridState, u: Cell) -> GridState:
    widths, missing = state
    r, c = u
    new = tuple(
        w if i < r - 1 else min(w, c - 1) for i, w in enumerate(widths)
    )
    while new and new[-1] == 0:
        new = new[:-1]
    if not new:
        return ((), False)
    keep_missing = missing  # the corner is never >= u here (u != corner)
    if keep_missing and sum(new) == 1:
        return ((), False)
    return (new, keep_missing)


def _state_upset(state: GridState, u: Cell) -> tuple[GridState, int]:
    """Strictly-above part of u as a missing-corner state, plus its size."""
    widths, _missing = state
    r, c = u
    up = tuple(w - c + 1 for w in widths[r - 1:] if w >= c)
    sz = sum(up) - 1
    if sz <= 0:
        return ((), False), 0
    return ((up, True), sz)


class GridEngine:
    """Shared memo tables for all staircase computations."""

    def __init__(self):
        self.values: dict[tuple[GridState, int], int] = {}

    def value(self, state: GridState, k: int) -> int:
        size = _state_size(state)
        if size == 0:
            return 0
        if k == 1:
            return size
        if self._is_chain(state):
            return _chain_value(size, k)
        key = (_canon_state(state), k)
        got = self.values.get(key)
        if got is not None:
            return got
        lb = tau(k, size)
        best = size  # sweeping everything is always available
        for u in _state_cells(state):
            if best == lb:
                break
            up_state, up_size = _state_upset(state, u)
            if k == 2:
                pos = up_size
            else:
                pos = self.value(up_state, k - 1)
            if pos + 1 > best:
                continue
            neg = self.value(_state_not_above(state, u), k)
            cand = max(neg, pos) + 1
            if cand < best:
                best = cand
        self.values[key] = best
        return best

    @staticmethod
    def _is_chain(state: GridState) -> bool:
        widths, missing = state
        return len(widths) == 1 or widths[0] == 1

    def branch_cost(self, state: GridState, k: int, u: Cell) -> int:
        up_state, up_size = _state_upset(state, u)
        pos = up_size if k == 2 else self.value(up_state, k - 1)
        neg = self.value(_state_not_above(state, u), k)
        return max(neg, pos) + 1

    # -- feasibility with tau pruning ------------------------------------

    def feasible(self, state: GridState, k: int, budget: int,
                 bounds: dict | None = None, deadline: Callable[[], bool] | None = None) -> bool:
        if bounds is None:
            bounds = {}
        return self._feasible(state, k, budget, bounds, deadline)

    def _feasible(self, state, k, budget, bounds, deadline) -> bool:
        size = _state_size(state)
        if size == 0:
            return True
        if budget < 0:
            return False
        if tau(k, size) > budget:
            return False
        if size <= budget:
            return True
        if k == 1:
            return False  # size > budget already
        if deadline is not None and deadline():
            raise TimeoutError("feasibility search timed out")
        key = (_canon_state(state), k)
        lo, hi = bounds.get(key, (-1, _INF))
        if budget <= lo:
            return False
        if budget >= hi:
            return True
        cands = sorted(
            _state_cells(state),
            key=lambda u: (_state_upset(state, u)[1], u),
        )
        ok = False
        for u in cands:
            up_state, up_size = _state_upset(state, u)
            if k == 2:
                if up_size > budget - 1:
                    continue
            else:
                if not self._feasible(up_state, k - 1, budget - 1, bounds, deadline):
                    continue
            if self._feasible(_state_not_above(state, u), k, budget - 1, bounds, deadline):
                ok = True
                break
        if ok:
            bounds[key] = (lo, min(hi, budget))
        else:
            bounds[key] = (max(lo, budget), hi)
        return ok


_GRID = GridEngine()


# ---------------------------------------------------------------------------
# chains (interval DP, the k-egg recursion)
# ---------------------------------------------------------------------------

_CHAIN: dict[tuple[int, int], int] = {}


def _chain_value(n: int, k: int) -> int:
    if n == 0:
        return 0
    if k == 1:
        return n
    got = _CHAIN.get((n, k))
    if got is not None:
        return got
    best = n
    for v in range(1, n + 1):
        cand = 1 + max(_chain_value(v - 1, k), _chain_value(n - v, k - 1))
        if cand < best:
            best = cand
    _CHAIN[(n, k)] = best
    return best


def chain_first_query(n: int, k: int) -> int:
    """1-based position to query first in a chain of n: T_k(tau_k(n)-1) + 1."""
    if n < 1:
        raise ValueError("chain must be nonempty")
    if n == 1:
        return 1
    return binomial_sum(k, tau(k, n) - 1) + 1


# ---------------------------------------------------------------------------
# general posets (bitmask recursion)
# ---------------------------------------------------------------------------

_MASK_LIMIT = 22


class MaskEngine:
    def __init__(self, poset: FinitePoset):
        if poset.n > _MASK_LIMIT and not poset.is_total():
            raise EngineError(
                f"general posets limited to {_MASK_LIMIT} ground elements"
            )
        self.p = poset
        self.values: dict[tuple[int, int], int] = {}

    def value(self, mask: int, k: int) -> int:
        size = mask.bit_count()
        if size == 0:
            return 0
        if k == 1:
            return size
        got = self.values.get((mask, k))
        if got is not None:
            return got
        lb = tau(k, size)
        best = size
        p = self.p
        m = mask
        while m and best > lb:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            up = p.up[u] & mask
            pos_mask = up & ~(1 << u)
            if k == 2:
                pos = pos_mask.bit_count()
            else:
                pos = self.value(pos_mask, k - 1)
            if pos + 1 > best:
                continue
            neg = self.value(mask & ~up, k)
            cand = max(neg, pos) + 1
            if cand < best:
                best = cand
        self.values[(mask, k)] = best
        return best

    def branch_cost(self, mask: int, k: int, u: int) -> int:
        up = self.p.up[u] & mask
        pos_mask = up & ~(1 << u)
        pos = pos_mask.bit_count() if k == 2 else self.value(pos_mask, k - 1)
        return max(self.value(mask & ~up, k), pos) + 1

    def feasible(self, mask: int, k: int, budget: int, bounds: dict) -> bool:
        size = mask.bit_count()
        if size == 0:
            return True
        if budget < 0:
            return False
        if tau(k, size) > budget:
            return False
        if size <= budget:
            return True
        if k == 1:
            return False
        lo, hi = bounds.get((mask, k), (-1, _INF))
        if budget <= lo:
            return False
        if budget >= hi:
            return True
        p = self.p
        cands = sorted(
            ((p.up[u] & mask & ~(1 << u)).bit_count(), u)
            for u in _bits(mask)
        )
        ok = False
        for _, u in cands:
            up = p.up[u] & mask
            pos_mask = up & ~(1 << u)
            if k == 2:
                if pos_mask.bit_count() > budget - 1:
                    continue
            elif not self.feasible(pos_mask, k - 1, budget - 1, bounds):
                continue
            if self.feasible(mask & ~up, k, budget - 1, bounds):
                ok = True
                break
        if ok:
            bounds[(mask, k)] = (lo, min(hi, budget))
        else:
            bounds[(mask, k)] = (max(lo, budget), hi)
        return ok


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


_MASK_ENGINES: dict[tuple[int, ...], MaskEngine] = {}


def _mask_engine(poset: FinitePoset) -> MaskEngine:
    eng = _MASK_ENGINES.get(poset.up)
    if eng is None:
        eng = MaskEngine(poset)
        _MASK_ENGINES[poset.up] = eng
    return eng


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def qk_value(poset: PosetLike, k: int) -> int:
    """The exact minimum worst-case number of queries."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(poset, StaircaseShape):
        return _GRID.value(_grid_state(poset), k)
    if poset.is_empty():
        return 0
    if poset.is_total():
        return _chain_value(poset.size, k)
    return _mask_engine(poset).value(poset.mask, k)


def best_first(poset: PosetLike, k: int):
    """All first queries u minimizing max(neg-branch, pos-branch) costs."""
    if k < 2:
        raise ValueError("best_first needs k >= 2")
    if isinstance(poset, StaircaseShape):
        if poset.is_empty():
            raise ValueError("empty poset has no first query")
        state = _grid_state(poset)
        target = _GRID.value(state, k)
        return {
            u for u in _state_cells(state) if _GRID.branch_cost(state, k, u) == target
        }
    if poset.is_empty():
        raise ValueError("empty poset has no first query")
    if poset.is_total():
        order = poset.sorted_elements()
        n = len(order)
        target = _chain_value(n, k)
        out = set()
        for pos, u in enumerate(order, start=1):
            cand = 1 + max(_chain_value(pos - 1, k), _chain_value(n - pos, k - 1))
            if cand == target:
                out.add(u)
        return out
    eng = _mask_engine(poset)
    target = eng.value(poset.mask, k)
    return {
        u for u in poset.elements() if eng.branch_cost(poset.mask, k, u) == target
    }


def feasible(poset: PosetLike, k: int, budget: int,
             deadline: Callable[[], bool] | None = None) -> bool:
    """True iff the poset can be searched within `budget` total queries."""
    if budget < 0:
        return False
    if isinstance(poset, StaircaseShape):
        return _GRID.feasible(_grid_state(poset), k, budget, deadline=deadline)
    if poset.is_empty():
        return True
    if poset.is_total():
        return _chain_value(poset.size, k) <= budget
    return _mask_engine(poset).feasible(poset.mask, k, budget, {})


# ---------------------------------------------------------------------------
# decision trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    """Nothing left to distinguish."""

    def cost(self) -> int:
        return 0


@dataclass(frozen=True)
class Descent:
    """k = 1 endgame: query these in order (non-increasing) until a positive."""
    order: tuple

    def cost(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class Node:
    query: object
    on_negative: "Tree"
    on_positive: "Tree"

    def cost(self) -> int:
        return 1 + max(self.on_negative.cost(), self.on_positive.cost())


Tree = Union[Node, Leaf, Descent]


def _grid_descent_order(state: GridState, offset: tuple[int, int]) -> tuple:
    """Cells of a state in a non-increasing order (descending lexicographic)."""
    dr, dc = offset
    return tuple(
        (r + dr, c + dc)
        for r, c in sorted(_state_cells(state), reverse=True)
    )


def _chain_split(length: int, k: int) -> int:
    """1-based split position within a chain of `length` per the closed form."""
    return chain_first_query(length, k)


def _grid_tree(state: GridState, k: int, offset: tuple[int, int]) -> Tree:
    if _state_size(state) == 0:
        return Leaf()
    if k == 1:
        return Descent(_grid_descent_order(state, offset))
    widths, missing = state
    dr, dc = offset
    # totally ordered states follow the closed-form split
    if len(widths) == 1 or widths[0] == 1:
        horiz = len(widths) == 1
        length = _state_size(state)
        skip = 1 if missing else 0
        split = _chain_split(length, k) + skip
        u = (1, split) if horiz else (split, 1)
    else:
        target = _GRID.value(state, k)
        u = min(
            cell for cell in _state_cells(state)
            if _GRID.branch_cost(state, k, cell) == target
        )
    up_state, _sz = _state_upset(state, u)
    neg_state = _state_not_above(state, u)
    neg = (
        Leaf() if _state_size(neg_state) == 0
        else _grid_tree(neg_state, k, offset)
    )
    pos_offset = (dr + u[0] - 1, dc + u[1] - 1)
    if k - 1 == 1:
        pos = Descent(_grid_descent_order(up_state, pos_offset)) \
            if _state_size(up_state) else Leaf()
    else:
        pos = _grid_tree(up_state, k - 1, pos_offset)
    return Node((u[0] + dr, u[1] + dc), neg, pos)


def _poset_descent_order(poset: FinitePoset, mask: int) -> tuple:
    sub = poset.restrict(mask)
    return tuple(reversed(sub.sorted_elements()))


def _poset_tree(poset: FinitePoset, mask: int, k: int, eng: MaskEngine | None) -> Tree:
    size = mask.bit_count()
    if size == 0:
        return Leaf()
    if k == 1:
        return Descent(_poset_descent_order(poset, mask))
    sub = poset.restrict(mask)
    if sub.is_total():
        order = sub.sorted_elements()
        u = order[_chain_split(size, k) - 1]
    else:
        assert eng is not None
        target = eng.value(mask, k)
        u = min(
            e for e in _bits(mask) if eng.branch_cost(mask, k, e) == target
        )
    up = poset.up[u] & mask
    pos_mask = up & ~(1 << u)
    neg_mask = mask & ~up
    neg = Leaf() if neg_mask == 0 else _poset_tree(poset, neg_mask, k, eng)
    if k - 1 == 1:
        pos = Descent(_poset_descent_order(poset, pos_mask)) if pos_mask else Leaf()
    else:
        pos = _poset_tree(poset, pos_mask, k - 1, eng)
    return Node(u, neg, pos)


def decision_tree(poset: PosetLike, k: int) -> Tree:
    """Full adaptive policy whose worst-case query count equals qk_value."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(poset, StaircaseShape):
        return _grid_tree(_grid_state(poset), k, (0, 0))
    if poset.is_empty():
        return Leaf()
    eng = None if poset.is_total() else _mask_engine(poset)
    return _poset_tree(poset, poset.mask, k, eng)


def replay_tree(tree: Tree, contains: Callable[[object], bool], k: int):
    """Walk a tree against a hidden ideal; returns (queries, positives, generator).

    `generator` is the positively identified generator element, or None for
    the empty ideal.
    """
    queries = 0
    positives = 0
    anchor = None
    node = tree
    while True:
        if isinstance(node, Leaf):
            return queries, positives, anchor
        if isinstance(node, Descent):
            for cell in node.order:
                queries += 1
                if contains(cell):
                    positives += 1
                    return queries, positives, cell
            return queries, positives, anchor
        queries += 1
        if contains(node.query):
            positives += 1
            anchor = node.query
            node = node.on_positive
        else:
            node = node.on_negative

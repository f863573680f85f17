"""Finite posets and grid staircase states.

Two representations live here.  StaircaseShape is the closed family of
states produced by cutting northeast up-sets out of a rectangular grid: a
list of row widths, bottom row first, weakly decreasing going up.  Cells
are 1-based (row, col) tuples, row 1 at the bottom.  FinitePoset is a
general finite poset over dense indices 0..n-1 with bit-vector up-sets;
subposets are carried as bitmasks over the parent ground set, so cutting
regions out is mask algebra.  A bridge converts small grids to FinitePoset
for oracle tests.
"""
from __future__ import annotations

from typing import Iterable, Iterator

Cell = tuple[int, int]


class StaircaseShape:
    """Grid lower set with weakly decreasing row widths (bottom first)."""

    __slots__ = ("widths",)

    def __init__(self, widths: Iterable[int]):
        ws = list(widths)
        while ws and ws[-1] == 0:
            ws.pop()
        for i, w in enumerate(ws):
            if w < 0:
                raise ValueError("negative row width")
            if i > 0 and w > ws[i - 1]:
                raise ValueError(f"row widths must be weakly decreasing: {ws}")
        self.widths: tuple[int, ...] = tuple(ws)

    # -- basic geometry ------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.widths)

    @property
    def cols(self) -> int:
        return self.widths[0] if self.widths else 0

    @property
    def size(self) -> int:
        return sum(self.widths)

    def is_empty(self) -> bool:
        return not self.widths

    def is_rectangle(self) -> bool:
        return all(w == self.cols for w in self.widths)

    def cells(self) -> Iterator[Cell]:
        for r, w in enumerate(self.widths, start=1):
            for c in range(1, w + 1):
                yield (r, c)

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= r <= self.rows and 1 <= c <= self.widths[r - 1]

    # -- order-theoretic pieces ----------------------------------------

    def upset_size(self, u: Cell) -> int:
        """|{v in shape : v >= u}|."""
        if u not in self:
            raise ValueError(f"cell {u} outside shape {self.widths}")
        r, c = u
        return sum(max(0, w - c + 1) for w in self.widths[r - 1:])

    def strictly_above_count(self, u: Cell) -> int:
        return self.upset_size(u) - 1

    def upset_shape(self, u: Cell) -> "StaircaseShape":
        """The up-set of u as a shape relocated so u becomes cell (1, 1)."""
        if u not in self:
            raise ValueError(f"cell {u} outside shape {self.widths}")
        r, c = u
        return StaircaseShape(w - c + 1 for w in self.widths[r - 1:] if w >= c)

    def not_above(self, u: Cell) -> "StaircaseShape":
        """Remove the up-set of u.  Rows below u keep their width."""
        if u not in self:
            raise ValueError(f"cell {u} outside shape {self.widths}")
        r, c = u
        return StaircaseShape(
            w if i < r - 1 else min(w, c - 1) for i, w in enumerate(self.widths)
        )

    def not_above_seq(self, seq: Iterable[Cell]) -> "StaircaseShape":
        shape = self
        for u in seq:
            if u in shape:
                shape = shape.not_above(u)
        return shape

    def transpose(self) -> "StaircaseShape":
        """Conjugate partition: cell (a, b) goes to (b, a)."""
        return StaircaseShape(
            sum(1 for w in self.widths if w >= k) for k in range(1, self.cols + 1)
        )

    def canonical(self) -> "StaircaseShape":
        """The lexicographically smaller of the shape and its transpose."""
        t = self.transpose()
        return self if self.widths <= t.widths else t

    # -- plumbing --------------------------------------------------------

    def to_json(self) -> dict:
        return {"widths": list(self.widths)}

    @classmethod
    def from_json(cls, data: dict) -> "StaircaseShape":
        return cls(data["widths"])

    def __eq__(self, other) -> bool:
        return isinstance(other, StaircaseShape) and self.widths == other.widths

    def __hash__(self) -> int:
        return hash(self.widths)

    def __repr__(self) -> str:
        return f"StaircaseShape({list(self.widths)})"


def make_grid(m: int, n: int) -> StaircaseShape:
    """The full m x n grid as a shape (m rows of width n)."""
    if m < 0 or n < 0:
        raise ValueError("grid dimensions must be >= 0")
    if m == 0 or n == 0:
        return StaircaseShape(())
    return StaircaseShape([n] * m)


def transpose(x):
    """Transpose a shape, a cell, or a sequence of cells."""
    if isinstance(x, StaircaseShape):
        return x.transpose()
    if isinstance(x, tuple) and len(x) == 2 and all(isinstance(v, int) for v in x):
        return (x[1], x[0])
    return [transpose(item) for item in x]


class FinitePoset:
    """Finite poset on indices 0..n-1 with bit-vector up-sets.

    ``mask`` selects the live elements; induced subposets share the parent
    relation arrays and differ only in mask, so no re-indexing ever happens.
    """

    __slots__ = ("n", "up", "down", "mask")

    def __init__(self, up: Iterable[int], mask: int | None = None, _checked: bool = False):
        self.up = tuple(up)
        self.n = len(self.up)
        full = (1 << self.n) - 1
        self.mask = full if mask is None else (mask & full)
        down = [0] * self.n
        for a in range(self.n):
            m = self.up[a]
            while m:
                b = (m & -m).bit_length() - 1
                down[b] |= 1 << a
                m &= m - 1
        self.down = tuple(down)
        if not _checked:
            self.validate()

    # -- constructors ----------------------------------------------------

    @classmethod
    def trivial(cls, n: int) -> "FinitePoset":
        return cls([1 << i for i in range(n)], _checked=True)

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        """Total order 0 < 1 < ... < n-1."""
        full = (1 << n) - 1
        return cls([full & ~((1 << i) - 1) for i in range(n)], _checked=True)

    @classmethod
    def from_pairs(cls, n: int, geq_pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        """Build from strict pairs (a, b) meaning a > b; closure is taken."""
        up = [1 << i for i in range(n)]
        for a, b in geq_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"pair ({a},{b}) out of range")
            up[b] |= 1 << a
        # transitive closure (Warshall on bitmasks)
        for _ in range(n):
            changed = False
            for b in range(n):
                m, acc = up[b], up[b]
                while m:
                    a = (m & -m).bit_length() - 1
                    acc |= up[a]
                    m &= m - 1
                if acc != up[b]:
                    up[b] = acc
                    changed = True
            if not changed:
                break
        return cls(up)

    @classmethod
    def product(cls, p: "FinitePoset", q: "FinitePoset") -> "FinitePoset":
        """Product order on index pairs, (i, j) -> i * q.n + j."""
        n = p.n * q.n
        up = []
        for i in range(p.n):
            for j in range(q.n):
                m = 0
                pm = p.up[i]
                while pm:
                    a = (pm & -pm).bit_length() - 1
                    qm = q.up[j]
                    while qm:
                        b = (qm & -qm).bit_length() - 1
                        m |= 1 << (a * q.n + b)
                        qm &= qm - 1
                    pm &= pm - 1
                up.append(m)
        assert len(up) == n
        return cls(up, _checked=True)

    # -- validation ------------------------------------------------------

    def validate(self) -> None:
        """Check reflexivity, antisymmetry and transitivity (O(n^3))."""
        for a in range(self.n):
            if not self.up[a] & (1 << a):
                raise ValueError(f"relation not reflexive at {a}")
        for a in range(self.n):
            for b in range(self.n):
                if a != b and self.geq(a, b) and self.geq(b, a):
                    raise ValueError(f"antisymmetry violated at ({a},{b})")
        for b in range(self.n):
            m = self.up[b]
            while m:
                a = (m & -m).bit_length() - 1
                if self.up[a] & ~self.up[b]:
                    raise ValueError(f"transitivity violated above {b} via {a}")
                m &= m - 1

    # -- structure -------------------------------------------------------

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def is_empty(self) -> bool:
        return self.mask == 0

    def elements(self) -> Iterator[int]:
        m = self.mask
        while m:
            yield (m & -m).bit_length() - 1
            m &= m - 1

    def geq(self, a: int, b: int) -> bool:
        """a >= b in the order."""
        return bool(self.up[b] & (1 << a))

    def upset_mask(self, u: int) -> int:
        return self.up[u] & self.mask

    def strict_up_mask(self, u: int) -> int:
        return self.up[u] & self.mask & ~(1 << u)

    def down_mask(self, u: int) -> int:
        return self.down[u] & self.mask

    def strictly_above_count(self, u: int) -> int:
        if not self.mask & (1 << u):
            raise ValueError(f"element {u} not in poset")
        return self.strict_up_mask(u).bit_count()

    def restrict(self, mask: int) -> "FinitePoset":
        sub = FinitePoset.__new__(FinitePoset)
        sub.n = self.n
        sub.up = self.up
        sub.down = self.down
        sub.mask = mask & self.mask
        return sub

    def not_above(self, u: int) -> "FinitePoset":
        if not self.mask & (1 << u):
            raise ValueError(f"element {u} not in poset")
        return self.restrict(self.mask & ~self.up[u])

    def strictly_above(self, u: int) -> "FinitePoset":
        if not self.mask & (1 << u):
            raise ValueError(f"element {u} not in poset")
        return self.restrict(self.strict_up_mask(u))

    def comparability_count(self) -> int:
        """Number of ordered pairs (a, b) with a >= b among live elements."""
        return sum((self.up[b] & self.mask).bit_count() for b in self.elements())

    def is_total(self) -> bool:
        # a finite order is total iff its up-set sizes are exactly 1..n
        sizes = sorted((self.up[u] & self.mask).bit_count() for u in self.elements())
        return sizes == list(range(1, self.size + 1))

    def is_trivial(self) -> bool:
        return all(self.strict_up_mask(u) == 0 for u in self.elements())

    def sorted_elements(self) -> list[int]:
        """Live elements sorted non-decreasingly in the order (linear extension)."""
        return sorted(self.elements(), key=lambda u: (self.down_mask(u).bit_count(), u))

    def ideals(self) -> list[int | None]:
        """All ideals: None for the empty one, else the principal generator."""
        return [None] + list(self.elements())

    # -- plumbing ----------------------------------------------------------

    def to_json(self) -> dict:
        pairs = [
            [a, b]
            for b in range(self.n)
            for a in range(self.n)
            if a != b and self.geq(a, b)
        ]
        return {"n": self.n, "geq": pairs}

    @classmethod
    def from_json(cls, data: dict) -> "FinitePoset":
        return cls.from_pairs(data["n"], [tuple(p) for p in data["geq"]])

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, live={self.size})"


def make_chain(n: int) -> FinitePoset:
    return FinitePoset.chain(n)


def make_trivial(n: int) -> FinitePoset:
    return FinitePoset.trivial(n)


def make_product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    return FinitePoset.product(p, q)


def grid_cell_index(shape: StaircaseShape, cell: Cell) -> int:
    """Dense index of a grid cell under the bridge ordering."""
    r, c = cell
    return (r - 1) * shape.cols + (c - 1)


def grid_to_poset(shape: StaircaseShape) -> FinitePoset:
    """Bridge a shape (<= 64 cells) to a FinitePoset for oracle tests.

    Indices follow the full bounding rectangle row-major from (1, 1); cells
    cut away by the staircase are simply absent from the mask.
    """
    if shape.size > 64:
        raise ValueError("bridge limited to 64 cells")
    m, n = shape.rows, shape.cols
    rect = FinitePoset.product(FinitePoset.chain(m), FinitePoset.chain(n))
    mask = 0
    for cell in shape.cells():
        mask |= 1 << grid_cell_index(shape, cell)
    return rect.restrict(mask)

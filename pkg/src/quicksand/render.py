"""Text and SVG pictures of first-stone schedules.

The ASCII form mimics the boxed-diagram convention: one box per cell,
each labelled with its region index, query cells wrapped in parentheses.
Row 1 is drawn at the bottom.  The SVG form fills one color per region
from a fixed 15-color palette so renders are reproducible.
"""
from __future__ import annotations

from .poset import Cell

PALETTE = [
    "#f4a7b9", "#ffe08a", "#b5e550", "#9fd8ef", "#c9b2de",
    "#f6c28b", "#a8e6cf", "#d7ccc8", "#f9f1a5", "#aec6cf",
    "#e2b6cf", "#cde7b0", "#ffd1dc", "#b0c4de", "#e6e6fa",
]


def _region_index(m: int, n: int, queries: list[Cell],
                  regs: list[set]) -> dict[Cell, int]:
    owner: dict[Cell, int] = {}
    for i, reg in enumerate(regs):
        for cell in reg:
            owner[cell] = i
    return owner


def ascii_strategy(m: int, n: int, queries: list[Cell], regs: list[set]) -> str:
    owner = _region_index(m, n, queries, regs)
    qset = {q: i for i, q in enumerate(queries)}
    width = max(4, len(str(len(queries))) + 3)
    sep = "+" + ("-" * width + "+") * n
    lines = [sep]
    for r in range(m, 0, -1):
        row = ["|"]
        for c in range(1, n + 1):
            idx = owner.get((r, c))
            if idx is None:
                text = ""
            elif (r, c) in qset:
                text = f"({qset[(r, c)] + 1})"
            else:
                text = str(idx + 1)
            row.append(text.center(width) + "|")
        lines.append("".join(row))
        lines.append(sep)
    return "\n".join(lines)


def svg_strategy(m: int, n: int, queries: list[Cell], regs: list[set],
                 cell_px: int = 32) -> str:
    owner = _region_index(m, n, queries, regs)
    qset = {q: i for i, q in enumerate(queries)}
    w, h = n * cell_px, m * cell_px
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            idx = owner.get((r, c))
            fill = PALETTE[idx % len(PALETTE)] if idx is not None else "#eeeeee"
            x = (c - 1) * cell_px
            y = (m - r) * cell_px
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell_px}" height="{cell_px}" '
                f'fill="{fill}" stroke="#444" stroke-width="1"/>'
            )
            if (r, c) in qset:
                parts.append(
                    f'<circle cx="{x + cell_px / 2}" cy="{y + cell_px / 2}" '
                    f'r="{cell_px * 0.36}" fill="none" stroke="#000"/>'
                )
                parts.append(
                    f'<text x="{x + cell_px / 2}" y="{y + cell_px / 2 + 4}" '
                    f'font-size="{cell_px * 0.4:.0f}" text-anchor="middle">'
                    f'{qset[(r, c)] + 1}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts)

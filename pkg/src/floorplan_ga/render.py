"""Text and SVG output: ASCII grids, layout images, stats CSV, fitness chart."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .core import GridMap
from .engine import GenerationStats

STATS_HEADER = ("generation", "best", "mean", "min")
SERIES_COLORS = {"best": "#d62728", "mean": "#1f77b4", "min": "#7f7f7f"}


class GridParseError(ValueError):
    """Malformed ASCII grid; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class RenderSpec:
    cell_px: int = 50
    shelf_style: str = "#3b3b3b"
    corridor_style: str = "#f4f1e8"
    show_grid_lines: bool = True
    grid_line_style: str = "#b8b4a8"
    chart_width: int = 640
    chart_height: int = 400

    def __post_init__(self):
        if self.cell_px < 1:
            raise ValueError("cell_px must be >= 1")


def ascii_render(grid: GridMap) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in grid.cells.tolist())


def parse_ascii(text: str) -> GridMap:
    """Inverse of :func:`ascii_render`; blank trailing lines are ignored."""
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GridParseError("empty grid")
    rows: List[List[int]] = []
    for ln, line in enumerate(lines, start=1):
        line = line.rstrip("\r")
        row = []
        for col, ch in enumerate(line, start=1):
            if ch in "01":
                row.append(int(ch))
            elif ch != " ":
                raise GridParseError(f"unexpected character {ch!r}", ln, col)
        if not row:
            raise GridParseError("empty row", ln, 1)
        if rows and len(row) != len(rows[0]):
            raise GridParseError(f"row has {len(row)} cells, expected {len(rows[0])}", ln, len(line) + 1)
        rows.append(row)
    return GridMap(np.array(rows, dtype=np.uint8))


def svg_render(grid: GridMap, spec: RenderSpec = RenderSpec()) -> str:
    """One ``<rect>`` per shelf cell; background and grid lines are paths."""
    px = spec.cell_px
    w, h = grid.width * px, grid.height * px
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<path class="corridor" d="M0 0H{w}V{h}H0Z" fill="{spec.corridor_style}"/>',
        f'<g class="shelves" fill="{spec.shelf_style}">',
    ]
    for x, y in grid.shelf_cells():
        out.append(f'<rect x="{x * px}" y="{y * px}" width="{px}" height="{px}"/>')
    out.append("</g>")
    if spec.show_grid_lines:
        d = "".join(f"M{x * px} 0V{h}" for x in range(grid.width + 1))
        d += "".join(f"M0 {y * px}H{w}" for y in range(grid.height + 1))
        out.append(f'<path class="grid" d="{d}" stroke="{spec.grid_line_style}" stroke-width="1" fill="none"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def stats_csv(stats: Sequence[GenerationStats]) -> str:
    if not stats:
        raise ValueError("no generation statistics to write")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(STATS_HEADER)
    for rec in stats:
        writer.writerow([rec.generation, repr(float(rec.best)), repr(float(rec.mean)), repr(float(rec.min))])
    return buf.getvalue()


def parse_stats_csv(text: str) -> List[GenerationStats]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != STATS_HEADER:
        raise ValueError(f"unexpected stats header {header}")
    return [GenerationStats(int(g), float(b), float(m), float(lo)) for g, b, m, lo in reader]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def fitness_chart_svg(stats: Sequence[GenerationStats], spec: RenderSpec = RenderSpec()) -> str:
    """Line chart of best/mean/min fitness against generation."""
    if len(stats) < 2:
        raise ValueError("a fitness chart needs at least two generations")
    W, H = spec.chart_width, spec.chart_height
    left, right, top, bottom = 60, 110, 20, 50
    pw, ph = W - left - right, H - top - bottom

    gens = [rec.generation for rec in stats]
    series = {name: [float(getattr(rec, name)) for rec in stats] for name in ("best", "mean", "min")}
    lo = min(series["min"])
    hi = max(series["best"])
    if hi == lo:
        lo, hi = lo - 1.0, hi + 1.0
    g0, g1 = gens[0], gens[-1]
    if g1 == g0:
        g1 = g0 + 1

    def sx(g):
        return left + (g - g0) / (g1 - g0) * pw

    def sy(v):
        return top + (hi - v) / (hi - lo) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="#ffffff"/>',
        f'<path class="axes" d="M{left} {top}V{top + ph}H{left + pw}" stroke="#000000" fill="none"/>',
    ]
    for k in range(5):
        v = lo + (hi - lo) * k / 4
        y = _fmt(sy(v))
        out.append(f'<text x="{left - 6}" y="{y}" text-anchor="end" dominant-baseline="middle">{v:.2f}</text>')
    for k in range(5):
        g = g0 + (g1 - g0) * k / 4
        x = _fmt(sx(g))
        out.append(f'<text x="{x}" y="{top + ph + 16}" text-anchor="middle">{g:g}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{H - 10}" text-anchor="middle">generation</text>')
    out.append(f'<text x="15" y="{top + ph / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 15 {top + ph / 2:.2f})">fitness</text>')
    for i, (name, values) in enumerate(series.items()):
        pts = " ".join(f"{_fmt(sx(g))},{_fmt(sy(v))}" for g, v in zip(gens, values))
        color = SERIES_COLORS[name]
        out.append(f'<polyline id="{name}" points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = top + 10 + 18 * i
        out.append(f'<path d="M{left + pw + 10} {ly}h20" stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{left + pw + 36}" y="{ly}" dominant-baseline="middle">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

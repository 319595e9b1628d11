"""Deterministic SVG rendering of a planar two-coloring."""

from __future__ import annotations

from itertools import combinations

from orchard.cochain import TwoPartition
from orchard.geometry import Configuration

COLOR_A = "#6a1b9a"  # class containing point 0
COLOR_B = "#c62828"
SIZE = 480
MARGIN = 40


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _clip(p, q, lo, hi):
    """The full line through p and q clipped to the square [lo, hi]^2."""
    (x0, y0), (x1, y1) = p, q
    dx, dy = x1 - x0, y1 - y0
    t_min, t_max = float("-inf"), float("inf")
    for start, delta in ((x0, dx), (y0, dy)):
        if delta == 0:
            if not lo <= start <= hi:
                return None
            continue
        a, b = (lo - start) / delta, (hi - start) / delta
        if a > b:
            a, b = b, a
        t_min, t_max = max(t_min, a), min(t_max, b)
    if t_min > t_max:
        return None
    return (x0 + t_min * dx, y0 + t_min * dy), (x0 + t_max * dx, y0 + t_max * dy)


def render_svg(config: Configuration, partition: TwoPartition, lines: bool = False) -> str:
    if config.dimension != 2:
        raise ValueError("SVG output needs a planar configuration (d = 2)")
    xs = [float(p[0]) for p in config.points]
    ys = [float(p[1]) for p in config.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (SIZE - 2 * MARGIN) / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def screen(x, y):
        # y axis points up in the picture
        return SIZE / 2 + (x - cx) * scale, SIZE / 2 - (y - cy) * scale

    pts = [screen(x, y) for x, y in zip(xs, ys)]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if lines:
        out.append('<g stroke="#9e9e9e" stroke-width="0.6">')
        for i, j in combinations(range(config.n), 2):
            seg = _clip(pts[i], pts[j], 0.0, float(SIZE))
            if seg is None:
                continue
            (a, b), (c, d) = seg
            out.append(f'<line x1="{_fmt(a)}" y1="{_fmt(b)}" x2="{_fmt(c)}" y2="{_fmt(d)}"/>')
        out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" text-anchor="middle">')
    for k, (x, y) in enumerate(pts):
        color = COLOR_B if partition.sign(k) < 0 else COLOR_A
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" fill="{color}"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y + 4)}" fill="#ffffff">{k}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Deterministic SVG renderings: points, clipped rays, the circle word."""

from __future__ import annotations

import math
from typing import Optional

from .geom import PointSet
from .rays import RayFamily, configuration_at_infinity

_CANVAS = 720.0
_COLORS = {"R": "#c62828", "B": "#1565c0"}


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(points: PointSet, family: Optional[RayFamily] = None,
               path: Optional[str] = None) -> str:
    """Points as colored disks, rays clipped to an enclosing circle, each
    ray-circle intersection labeled in clockwise reading order.

    Identical inputs produce byte-identical output.
    """
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2
    spread = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    radius = spread * 0.75 + 1.0
    scale = (_CANVAS * 0.42) / radius

    def to_px(x: float, y: float) -> tuple[float, float]:
        return (_CANVAS / 2 + (x - cx) * scale, _CANVAS / 2 - (y - cy) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_CANVAS)}" '
        f'height="{_fmt(_CANVAS)}" viewBox="0 0 {_fmt(_CANVAS)} {_fmt(_CANVAS)}">',
        f'<rect width="{_fmt(_CANVAS)}" height="{_fmt(_CANVAS)}" fill="#ffffff"/>',
        f'<circle cx="{_fmt(_CANVAS / 2)}" cy="{_fmt(_CANVAS / 2)}" '
        f'r="{_fmt(radius * scale)}" fill="none" stroke="#aaaaaa" stroke-width="1"/>',
    ]
    if family is not None:
        for ray in family.rays:
            ax, ay = float(ray.apex.x), float(ray.apex.y)
            dx, dy = float(ray.direction.dx), float(ray.direction.dy)
            norm = math.hypot(dx, dy)
            dx, dy = dx / norm, dy / norm
            # clip apex + t (dx, dy) to the enclosing circle
            ox, oy = ax - cx, ay - cy
            b = ox * dx + oy * dy
            c = ox * ox + oy * oy - radius * radius
            disc = b * b - c
            t = -b + math.sqrt(max(disc, 0.0))
            ex, ey = ax + t * dx, ay + t * dy
            x1, y1 = to_px(ax, ay)
            x2, y2 = to_px(ex, ey)
            color = _COLORS[ray.color.value]
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                f'y2="{_fmt(y2)}" stroke="{color}" stroke-width="1.5"/>'
            )
            lx, ly = to_px(ax + (t + radius * 0.04) * dx, ay + (t + radius * 0.04) * dy)
            lines.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="14" '
                f'text-anchor="middle" fill="{color}">{ray.color.letter}</text>'
            )
    for p in points:
        x, y = to_px(float(p.x), float(p.y))
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
            f'fill="{_COLORS[p.color.value]}"/>'
        )
    if family is not None:
        word = configuration_at_infinity(family)
        lines.append(
            f'<text x="{_fmt(_CANVAS / 2)}" y="24" font-size="18" '
            f'text-anchor="middle" fill="#333333">{word.word}</text>'
        )
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text

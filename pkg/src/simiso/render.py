"""Deterministic SVG figures of packings and their similar subpackings.

Colors follow the conventions of the source figures: the generating
lattice component dark, other packing components gray, image components
blue/yellow/green.  Byte output is fixed for fixed inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .oracle import Window, points_in_window
from .packings import PointPacking
from .rings import EISENSTEIN, FieldElem
from .similarity import Similarity

PACKING_COLORS = ("#1c1c1c", "#9e9e9e", "#c96b6b", "#7c5aa8")
IMAGE_COLORS = ("#2b6cb0", "#f2c12e", "#38a169", "#d97706")

_SQRT3_2 = math.sqrt(3.0) / 2.0


def to_xy(p: FieldElem) -> tuple[float, float]:
    """Cartesian image of a ring-coordinate point."""
    a, b = float(p.a), float(p.b)
    if p.ring == EISENSTEIN:
        return a - b / 2.0, b * _SQRT3_2
    return a, b


def render_svg(
    packing: PointPacking,
    s: Similarity | None,
    window: Window,
    size: int = 640,
) -> str:
    """An SVG document showing the packing and, optionally, its image."""
    x0, y0, x1, y1 = (Fraction(c) for c in window)
    corners = [
        to_xy(FieldElem(packing.ring, cx, cy))
        for cx in (x0, x1)
        for cy in (y0, y1)
    ]
    min_x = min(c[0] for c in corners)
    max_x = max(c[0] for c in corners)
    min_y = min(c[1] for c in corners)
    max_y = max(c[1] for c in corners)
    pad = 0.05 * max(max_x - min_x, max_y - min_y)
    min_x, max_x = min_x - pad, max_x + pad
    min_y, max_y = min_y - pad, max_y + pad
    scale = size / max(max_x - min_x, max_y - min_y)
    height = round((max_y - min_y) * scale)

    def pix(p: FieldElem) -> tuple[str, str]:
        x, y = to_xy(p)
        return (
            f"{(x - min_x) * scale:.2f}",
            f"{(max_y - y) * scale:.2f}",
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{height}" '
        f'viewBox="0 0 {size} {height}">',
        f'<rect width="{size}" height="{height}" fill="white"/>',
    ]
    legend: list[tuple[str, str]] = []

    for k, shift_vec in enumerate(packing.shifts):
        color = PACKING_COLORS[k % len(PACKING_COLORS)]
        component = PointPacking(packing.lattice, (shift_vec,))
        lines.append(f'<g fill="none" stroke="{color}" stroke-width="1.2">')
        for p in points_in_window(component, (x0, y0, x1, y1)):
            cx, cy = pix(p)
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="4.0"/>')
        lines.append("</g>")
        legend.append((color, f"{shift_vec}+Γ"))

    if s is not None:
        image = packing.image(s)
        for k, shift_vec in enumerate(image.shifts):
            color = IMAGE_COLORS[k % len(IMAGE_COLORS)]
            component = PointPacking(image.lattice, (shift_vec,))
            lines.append(f'<g fill="{color}">')
            for p in points_in_window(component, (x0, y0, x1, y1)):
                cx, cy = pix(p)
                lines.append(f'<circle cx="{cx}" cy="{cy}" r="2.4"/>')
            lines.append("</g>")
            legend.append((color, f"image of {packing.shifts[k]}+Γ"))

    ly = 16
    for color, label in legend:
        lines.append(f'<circle cx="12" cy="{ly - 4}" r="4.0" fill="{color}"/>')
        lines.append(
            f'<text x="22" y="{ly}" font-family="sans-serif" '
            f'font-size="12">{_escape(label)}</text>'
        )
        ly += 16
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")

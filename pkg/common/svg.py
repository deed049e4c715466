"""Deterministic SVG drawing of a configuration: one labeled arrow per vector over the unit circle."""
import html
from typing import List

from config import conf
from geometry import Configuration

STROKE = "#1f4e79"
MARGIN = 100
LABEL_OFFSET = 1.08


def _num(x: float) -> str:
    return f"{x:.2f}"


def render_svg(c: Configuration, canvas: int = None, title: str = None) -> str:
    """Length max(1, max|v|) maps to canvas/2 - MARGIN pixels; the dashed circle is the unit circle."""
    canvas = int(conf().get("svg_canvas", 800) if canvas is None else canvas)
    center = canvas / 2
    scale = (center - MARGIN) / max(1.0, c.scale())

    def point(x: float, y: float):
        return center + scale * x, center - scale * y

    lines: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas}" height="{canvas}" viewBox="0 0 {canvas} {canvas}">',
    ]
    if title:
        lines.append(f"  <title>{html.escape(title)}</title>")
    lines += [
        "  <defs>",
        '    <marker id="arrow" markerWidth="10" markerHeight="10" refX="9" refY="5" orient="auto">',
        f'      <path d="M0,0 L10,5 L0,10 z" fill="{STROKE}" />',
        "    </marker>",
        "  </defs>",
        f'  <rect x="0" y="0" width="{canvas}" height="{canvas}" fill="#ffffff" />',
        f'  <circle cx="{_num(center)}" cy="{_num(center)}" r="{_num(scale)}" fill="none" stroke="#999999" stroke-dasharray="4 4" />',
    ]
    for i, v in enumerate(c.vectors):
        vx, vy = float(v.x), float(v.y)
        x2, y2 = point(vx, vy)
        lx, ly = point(LABEL_OFFSET * vx, LABEL_OFFSET * vy)
        lines.append(
            f'  <line x1="{_num(center)}" y1="{_num(center)}" x2="{_num(x2)}" y2="{_num(y2)}" '
            f'stroke="{STROKE}" stroke-width="2" marker-end="url(#arrow)" />'
        )
        lines.append(
            f'  <text x="{_num(lx)}" y="{_num(ly)}" font-family="sans-serif" font-size="16" '
            f'text-anchor="middle" dominant-baseline="middle">{i}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

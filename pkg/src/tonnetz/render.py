"""SVG rendering of unfolded k=3 Tonnetze on the hexagonal Delone tiling."""
from __future__ import annotations

from math import sqrt

from tonnetz.core import LengthVector
from tonnetz.errors import UnsupportedK
from tonnetz.lattice import lambda_L

H = sqrt(3) / 2


def grid_label(L: LengthVector, r: int, c: int, origin: int = 0) -> int:
    """Label of the point ``c`` steps along a_1 and ``r`` steps along -a_2."""
    return (origin + c * L.lengths[0] - r * L.lengths[1]) % L.n


def _xy(q1: float, q2: float) -> tuple[float, float]:
    # a_1 points right, a_2 up-left (SVG y grows downwards), 120 degrees apart
    return q1 - q2 / 2, -q2 * H


def render_svg(L: LengthVector, rows: int, cols: int, origin: int = 0, scale: float = 48.0) -> str:
    """A ``rows x cols`` patch of parallelograms, each split into two triangles.

    Every lattice point carries its Z_n label; the fundamental domain of
    Lambda_L spanned by its HNF generators is outlined from the top-left point.
    """
    if L.k != 3:
        raise UnsupportedK(f"rendering needs k = 3, got k = {L.k}")
    sub = lambda_L(L)
    margin = scale
    pts = {}
    for r in range(rows + 1):
        for c in range(cols + 1):
            x, y = _xy(c, -r)
            pts[r, c] = (margin + scale * x, margin + scale * y)
    b1 = [row[0] for row in sub.basis]
    b2 = [row[1] for row in sub.basis]
    corners = [(0, 0), tuple(b1), (b1[0] + b2[0], b1[1] + b2[1]), tuple(b2)]
    domain = [(margin + scale * x, margin + scale * y) for x, y in (_xy(*q) for q in corners)]
    xs = [p[0] for p in pts.values()] + [p[0] for p in domain]
    ys = [p[1] for p in pts.values()] + [p[1] for p in domain]
    dx, dy = -min(min(xs) - margin, 0), -min(min(ys) - margin, 0)
    width, height = max(xs) + dx + margin, max(ys) + dy + margin

    def fmt(p: tuple[float, float]) -> str:
        return f"{p[0] + dx:.3f},{p[1] + dy:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3f}" '
        f'height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
        f"<title>Tonn^{{{L.n},3}}{L}</title>",
        '<g class="triangles" fill="none" stroke="#444" stroke-width="1">',
    ]
    for r in range(rows):
        for c in range(cols):
            for tri in (((r, c), (r, c + 1), (r + 1, c)), ((r, c + 1), (r + 1, c + 1), (r + 1, c))):
                labs = " ".join(str(grid_label(L, *p, origin)) for p in tri)
                out.append(f'<polygon data-labels="{labs}" points="{" ".join(fmt(pts[p]) for p in tri)}"/>')
    out.append("</g>")
    out.append(
        f'<polygon class="fundamental-domain" fill="#e0b000" fill-opacity="0.15" stroke="#c03000" '
        f'stroke-width="2" points="{" ".join(fmt(p) for p in domain)}"/>'
    )
    out.append('<g class="labels" font-family="sans-serif" font-size="14" text-anchor="middle">')
    for (r, c), p in sorted(pts.items()):
        x, y = p[0] + dx, p[1] + dy
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="11" fill="white" stroke="#222"/>')
        out.append(
            f'<text data-r="{r}" data-c="{c}" x="{x:.3f}" y="{y + 5:.3f}">{grid_label(L, r, c, origin)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

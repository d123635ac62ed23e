"""Text and SVG renderings of chord diagrams."""

from __future__ import annotations

import math

from .diagram import Diagram
from .invariants import chord_diagram, cowrithe, interleaving_matrix, writhe

_SIZE = 400
_RADIUS = 160


def _point(i: int, total: int) -> tuple[float, float]:
    # endpoint 0 at the top, traversal runs clockwise
    theta = math.pi / 2 - 2 * math.pi * i / total
    return _SIZE / 2 + _RADIUS * math.cos(theta), _SIZE / 2 - _RADIUS * math.sin(theta)


def _intersection(p1, p2, q1, q2):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, q1, q2
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)


def chord_svg(d: Diagram) -> str:
    """SVG 1.1 chord diagram; black dots mark positive interleaved pairs,
    white dots negative ones."""
    cd = chord_diagram(d)
    total = len(cd.circle)
    c = _SIZE / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<circle cx="{c:.2f}" cy="{c:.2f}" r="{_RADIUS}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for x, (a, b) in sorted(cd.chords.items()):
        (xa, ya), (xb, yb) = _point(a, total), _point(b, total)
        colour = "#1f4e9c" if cd.signs[x] > 0 else "#b22222"
        out.append(
            f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" '
            f'stroke="{colour}" stroke-width="1.5"><title>crossing {x} '
            f'({"+" if cd.signs[x] > 0 else "-"})</title></line>'
        )
    for i, (x, over) in enumerate(d.code):
        px, py = _point(i, total)
        lx = c + (px - c) * 1.09
        ly = c + (py - c) * 1.09
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="10" text-anchor="middle" '
            f'dominant-baseline="middle">{x}{"o" if over else "u"}</text>'
        )
    for p, q, sign in cd.pairs():
        a1, a2 = cd.chords[p]
        b1, b2 = cd.chords[q]
        ix, iy = _intersection(_point(a1, total), _point(a2, total),
                               _point(b1, total), _point(b2, total))
        fill = "black" if sign > 0 else "white"
        out.append(f'<circle cx="{ix:.2f}" cy="{iy:.2f}" r="3.5" fill="{fill}" stroke="black"/>')
    out.append(
        f'<text x="8" y="{_SIZE - 8}" font-size="12">w = {writhe(d)}, x = {cowrithe(d)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def chord_ascii(d: Diagram) -> str:
    """Gauss sequence plus the signed interleaving matrix."""
    if not d.code:
        return "gauss: (empty)\n"
    gauss = " ".join(
        f"{c}{'o' if o else 'u'}{'+' if d.sign(c) > 0 else '-'}" for c, o in d.code
    )
    order, mat = interleaving_matrix(d)
    width = max(len(str(c)) for c in order) + 1
    lines = [f"gauss: {gauss}", " " * width + "".join(f"{c:>{width}}" for c in order)]
    glyph = {1: "+", -1: "-", 0: "."}
    for c, row in zip(order, mat):
        lines.append(f"{c:>{width}}" + "".join(f"{glyph[v]:>{width}}" for v in row))
    return "\n".join(lines) + "\n"

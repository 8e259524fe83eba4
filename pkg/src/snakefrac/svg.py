"""Deterministic SVG drawings of snake graphs and their perfect matchings."""
from __future__ import annotations

from typing import Optional, Sequence
from xml.sax.saxutils import escape

from snakefrac.matchings import edge_vertices, edges_of
from snakefrac.snake import SnakeShape, tile_positions

TILE = 40
MARGIN = 20
RENDER_GUARD = 60
PANELS_PER_ROW = 5


def _extent(shape: SnakeShape) -> tuple:
    verts = [v for e in edges_of(shape) for v in edge_vertices(shape, e)]
    xs, ys = [v[0] for v in verts], [v[1] for v in verts]
    return max(xs), max(ys)


def _panel(shape: SnakeShape, ox: int, oy: int, labels: Optional[dict],
           tile_labels: Optional[dict], matched: Sequence = ()) -> list:
    width, height = _extent(shape)
    px = lambda x: ox + MARGIN + TILE * x
    py = lambda y: oy + MARGIN + TILE * (height - y)
    out = []
    matched = set(matched)
    for e in edges_of(shape):
        (x0, y0), (x1, y1) = edge_vertices(shape, e)
        thick = e in matched
        out.append(
            f'<line x1="{px(x0)}" y1="{py(y0)}" x2="{px(x1)}" y2="{py(y1)}" '
            f'stroke="{"#c00" if thick else "#000"}" stroke-width="{6 if thick else 1}" '
            f'stroke-linecap="round"/>')
        if labels:
            mx, my = (px(x0) + px(x1)) / 2, (py(y0) + py(y1)) / 2
            dx, dy = (0, -3) if y0 == y1 else (3, 4)
            out.append(f'<text x="{mx + dx:g}" y="{my + dy:g}" font-size="8" '
                       f'text-anchor="{"middle" if y0 == y1 else "start"}">'
                       f'{escape(labels[e])}</text>')
    for j, (x, y) in enumerate(tile_positions(shape), 1):
        text = tile_labels[j] if tile_labels else str(j)
        out.append(f'<text x="{px(x) + TILE // 2}" y="{py(y) - TILE // 2 + 4}" font-size="11" '
                   f'text-anchor="middle" fill="#555">{escape(text)}</text>')
    return out


def render_svg(shape: SnakeShape, labels: Optional[dict] = None,
               tile_labels: Optional[dict] = None, matchings: Optional[list] = None) -> str:
    """SVG text of ``shape``; with ``matchings`` one panel per matching, edges thickened."""
    if shape.d > RENDER_GUARD:
        raise ValueError(f"{shape.d} tiles exceeds the render limit of {RENDER_GUARD}")
    width, height = _extent(shape)
    pw, ph = TILE * width + 2 * MARGIN, TILE * height + 2 * MARGIN
    body = []
    if matchings is None:
        body += _panel(shape, 0, 0, labels, tile_labels)
        total_w, total_h = pw, ph
    else:
        cols = min(PANELS_PER_ROW, max(len(matchings), 1))
        rows = -(-len(matchings) // cols) if matchings else 1
        for k, m in enumerate(matchings):
            ox, oy = (k % cols) * pw, (k // cols) * ph
            body += _panel(shape, ox, oy, labels, tile_labels, m.edges)
        total_w, total_h = cols * pw, rows * ph
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
            f'viewBox="0 0 {total_w} {total_h}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="#fff"/>'] + body + ["</svg>"]) + "\n"

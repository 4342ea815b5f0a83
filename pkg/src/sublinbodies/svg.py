"""Deterministic layered SVG figures (fixed 800x800 viewport)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Polygon2

SIZE = 800
MARGIN = 60
SOURCE_COLOR = "#888888"
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]


@dataclass
class Layer:
    """One drawable item: ``kind`` is ``polygon``, ``polyline`` or ``points``."""

    label: str
    kind: str
    points: np.ndarray
    color: str
    dashed: bool = False


def layer_from(label: str, obj, color: str | None = None) -> Layer | None:
    """Build a layer from a polygon, a point array or a ``(kind, pts, dashed)`` tuple."""
    color = color or PALETTE[0]
    if isinstance(obj, Polygon2):
        if obj.is_empty:
            return None
        kind = "polygon" if len(obj.vertices) >= 3 else ("polyline" if len(obj.vertices) == 2 else "points")
        return Layer(label, kind, np.asarray(obj.vertices, float), color)
    if isinstance(obj, tuple):
        kind, pts, dashed = obj
        return Layer(label, kind, np.asarray(pts, float), color, bool(dashed))
    return Layer(label, "points", np.asarray(obj, float).reshape(-1, 2), color)


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(layers: list[Layer], title: str | None = None) -> str:
    """Render layers with a common aspect-preserving transform and a legend."""
    layers = [l for l in layers if l is not None and len(l.points)]
    if layers:
        allp = np.concatenate([l.points for l in layers])
        lo, hi = allp.min(axis=0), allp.max(axis=0)
    else:
        lo, hi = np.array([-1.0, -1.0]), np.array([1.0, 1.0])
    span = max(float(np.max(hi - lo)), 1e-12)
    scale = (SIZE - 2 * MARGIN) / span
    mid = (lo + hi) / 2

    def tx(P):
        P = np.atleast_2d(P)
        x = SIZE / 2 + (P[:, 0] - mid[0]) * scale
        y = SIZE / 2 - (P[:, 1] - mid[1]) * scale
        return " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(x, y))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>']
    for l in layers:
        dash = ' stroke-dasharray="6,4"' if l.dashed else ""
        if l.kind == "polygon":
            out.append(f'<polygon points="{tx(l.points)}" fill="none" stroke="{l.color}" stroke-width="2"{dash}/>')
        elif l.kind == "polyline":
            out.append(f'<polyline points="{tx(l.points)}" fill="none" stroke="{l.color}" stroke-width="2"{dash}/>')
        else:
            r = 4 if len(l.points) <= 50 else 1.5
            for p in tx(l.points).split():
                x, y = p.split(",")
                out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="{l.color}"/>')
    y = 20
    if title:
        out.append(f'<text x="10" y="{y}" font-family="monospace" font-size="14">{_escape(title)}</text>')
        y += 20
    for l in layers:
        out.append(f'<rect x="10" y="{y - 10}" width="20" height="4" fill="{l.color}"/>')
        out.append(f'<text x="36" y="{y - 4}" font-family="monospace" font-size="12">{_escape(l.label)}</text>')
        y += 18
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def figure_svg(items, title: str | None = None) -> str:
    """Render ``(label, object, color)`` triples; the first is the gray source."""
    layers = []
    for i, (label, obj, color) in enumerate(items):
        layers.append(layer_from(label, obj, SOURCE_COLOR if i == 0 and color is None else color or PALETTE[i % len(PALETTE)]))
    return render_svg(layers, title)


__all__ = ["Layer", "layer_from", "render_svg", "figure_svg", "SOURCE_COLOR", "PALETTE"]

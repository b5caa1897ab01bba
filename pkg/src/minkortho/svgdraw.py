"""Scale-free SVG diagrams of orthocentric configurations.

Circles of the gauge are drawn as closed polylines sampled through
``circle_point`` so that, e.g., the l1 and l-infinity circles come out as
true diamonds and squares.  The viewBox is fixed from the bounding box of
everything drawn plus a 10% margin.
"""

from __future__ import annotations

import math

from .orthocentric import OrthocentricConfig
from .plane import Circle, NormSpec, ORIGIN, Vec2, circle_point

DEFAULT_CIRCLE_SAMPLES = 256


class SvgCanvas:
    """Collects shapes, tracks their bounding box, and serializes them.

    Plane y grows upward; SVG y grows downward, so coordinates are flipped
    at draw time.
    """

    def __init__(self):
        self._elements: list[str] = []
        self._min_x = self._min_y = math.inf
        self._max_x = self._max_y = -math.inf

    def _track(self, x: float, y: float):
        self._min_x = min(self._min_x, x)
        self._max_x = max(self._max_x, x)
        self._min_y = min(self._min_y, y)
        self._max_y = max(self._max_y, y)

    def _points_attr(self, pts: list[Vec2]) -> str:
        coords = []
        for p in pts:
            self._track(p.x, -p.y)
            coords.append(f"{p.x:.9g},{-p.y:.9g}")
        return " ".join(coords)

    def polyline(self, pts: list[Vec2], stroke: str, width: float, closed: bool = False):
        tag = "polygon" if closed else "polyline"
        self._elements.append(
            f'<{tag} points="{self._points_attr(pts)}" fill="none" '
            f'stroke="{stroke}" stroke-width="{width:.6g}"/>'
        )

    def dot(self, p: Vec2, radius: float, fill: str):
        self._track(p.x - radius, -p.y - radius)
        self._track(p.x + radius, -p.y + radius)
        self._elements.append(
            f'<circle cx="{p.x:.9g}" cy="{-p.y:.9g}" r="{radius:.6g}" fill="{fill}"/>'
        )

    def label(self, p: Vec2, text: str, size: float, fill: str = "#333333"):
        self._track(p.x, -p.y)
        self._elements.append(
            f'<text x="{p.x:.9g}" y="{-p.y:.9g}" font-size="{size:.6g}" '
            f'fill="{fill}">{text}</text>'
        )

    def to_string(self) -> str:
        if not self._elements or not math.isfinite(self._min_x):
            view = "0 0 1 1"
        else:
            w = self._max_x - self._min_x
            h = self._max_y - self._min_y
            pad = 0.1 * max(w, h, 1e-9)
            view = (f"{self._min_x - pad:.9g} {self._min_y - pad:.9g} "
                    f"{w + 2 * pad:.9g} {h + 2 * pad:.9g}")
        body = "\n".join(self._elements)
        return ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">\n'
                f"{body}\n</svg>\n")

    def save(self, path: str):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_string())


def circle_polyline(spec: NormSpec, circle: Circle,
                    samples: int = DEFAULT_CIRCLE_SAMPLES) -> list[Vec2]:
    step = 2.0 * math.pi / samples
    return [circle_point(spec, circle, k * step) for k in range(samples)]


DRAWABLE_PARTS = ("unit", "triangles", "circumcircle", "orthocircle", "sixpoint", "points")


def render_construction_svg(spec: NormSpec, cfg: OrthocentricConfig, path: str,
                            samples: int = DEFAULT_CIRCLE_SAMPLES,
                            parts: tuple[str, ...] = DRAWABLE_PARTS,
                            stroke_width: float | None = None) -> None:
    """Draw the configuration: unit circle, both triangles, and the circles.

    The radius-dependent circles are skipped when the configuration carries
    no verified radius.
    """
    span = max((cfg.x1 - cfg.x2).euclidean(), (cfg.x1 - cfg.x3).euclidean(), 1.0)
    w = stroke_width if stroke_width is not None else 0.006 * span
    canvas = SvgCanvas()
    if "unit" in parts:
        canvas.polyline(circle_polyline(spec, Circle(ORIGIN, 1.0), samples),
                        "#bbbbbb", w, closed=True)
    if "triangles" in parts:
        canvas.polyline([cfg.x1, cfg.x2, cfg.x3], "#1f77b4", w, closed=True)
        canvas.polyline([cfg.p1, cfg.p2, cfg.p3], "#ff7f0e", w, closed=True)
    if cfg.radius is not None:
        lam = cfg.radius
        if "circumcircle" in parts:
            canvas.polyline(circle_polyline(spec, Circle(cfg.p4, lam), samples),
                            "#2ca02c", w, closed=True)
        if "orthocircle" in parts:
            canvas.polyline(circle_polyline(spec, Circle(cfg.x4, lam), samples),
                            "#d62728", w, closed=True)
        if "sixpoint" in parts:
            canvas.polyline(circle_polyline(spec, Circle(cfg.q, 0.5 * lam), samples),
                            "#9467bd", w, closed=True)
    if "points" in parts:
        r = 1.2 * w
        for name in ("x1", "x2", "x3", "x4", "p4", "q"):
            canvas.dot(getattr(cfg, name), r, "#333333")
        for name in ("m1", "m2", "m3", "d1", "d2", "d3"):
            canvas.dot(getattr(cfg, name), 0.8 * r, "#9467bd")
    canvas.save(path)

"""Static SVG pictures of cages, nodes and caged curves.

This is the only floating-point code in the package.  Implicit curves are
traced by sampling the sign of the polynomial on a grid and joining the
linearly interpolated edge crossings of each cell (marching squares).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidViewportError
from .geometry import Line, ProjPoint
from .poly import HomPoly

CANVAS = 600.0


@dataclass(frozen=True)
class Element:
    kind: str  # "line", "point" or "curve"
    obj: Line | ProjPoint | HomPoly
    style: dict = field(default_factory=dict, hash=False, compare=False)


@dataclass
class Scene:
    viewport: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    elements: list[Element] = field(default_factory=list)

    def add_line(self, L: Line, **style) -> Scene:
        self.elements.append(Element("line", L, style))
        return self

    def add_point(self, p: ProjPoint, **style) -> Scene:
        self.elements.append(Element("point", p, style))
        return self

    def add_curve(self, P: HomPoly, **style) -> Scene:
        self.elements.append(Element("curve", P, style))
        return self


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    def __init__(self, viewport):
        xmin, xmax, ymin, ymax = (float(v) for v in viewport)
        if not (xmax > xmin and ymax > ymin):
            raise InvalidViewportError(f"empty viewport {viewport}")
        self.xmin, self.xmax, self.ymin, self.ymax = xmin, xmax, ymin, ymax
        self.scale = CANVAS / (xmax - xmin)
        self.width = CANVAS
        self.height = (ymax - ymin) * self.scale

    def to_canvas(self, x: float, y: float) -> tuple[float, float]:
        return (x - self.xmin) * self.scale, (self.ymax - y) * self.scale


def clip_line(L: Line, viewport) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Segment of the affine line inside the viewport, or None if it misses it."""
    a, b, c = (float(v) for v in L.coeffs)
    xmin, xmax, ymin, ymax = (float(v) for v in viewport)
    if a == 0 and b == 0:
        return None
    hits = []
    if b != 0:
        for x in (xmin, xmax):
            y = -(a * x + c) / b
            if ymin <= y <= ymax:
                hits.append((x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = -(b * y + c) / a
            if xmin <= x <= xmax:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def _sample(P: HomPoly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    X, Y = np.meshgrid(xs, ys)
    F = np.zeros_like(X)
    for (a, b, _), q in P.terms.items():
        F += float(q) * X**a * Y**b
    return F


def contour_segments(P: HomPoly, viewport, resolution: int):
    """Zero-set segments of P(x, y, 1) over a resolution x resolution cell grid."""
    xmin, xmax, ymin, ymax = (float(v) for v in viewport)
    xs = np.linspace(xmin, xmax, resolution + 1)
    ys = np.linspace(ymin, ymax, resolution + 1)
    F = _sample(P, xs, ys)
    pos = F > 0
    segments = []

    def cross(x0, y0, f0, x1, y1, f1):
        t = f0 / (f0 - f1)
        return (x0 + t * (x1 - x0), y0 + t * (y1 - y0))

    for r in range(resolution):
        for c in range(resolution):
            s00, s10, s01, s11 = pos[r, c], pos[r, c + 1], pos[r + 1, c], pos[r + 1, c + 1]
            if s00 == s10 == s01 == s11:
                continue
            x0, x1, y0, y1 = xs[c], xs[c + 1], ys[r], ys[r + 1]
            f00, f10, f01, f11 = F[r, c], F[r, c + 1], F[r + 1, c], F[r + 1, c + 1]
            pts = []
            if s00 != s10:
                pts.append(cross(x0, y0, f00, x1, y0, f10))
            if s10 != s11:
                pts.append(cross(x1, y0, f10, x1, y1, f11))
            if s11 != s01:
                pts.append(cross(x1, y1, f11, x0, y1, f01))
            if s01 != s00:
                pts.append(cross(x0, y1, f01, x0, y0, f00))
            if len(pts) == 2:
                segments.append((pts[0], pts[1]))
            elif len(pts) == 4:
                centre = (f00 + f10 + f01 + f11) / 4 > 0
                if centre == s00:
                    segments += [(pts[0], pts[1]), (pts[2], pts[3])]
                else:
                    segments += [(pts[3], pts[0]), (pts[1], pts[2])]
    return segments


_DEFAULT = {
    "line": {"stroke": "#444444", "stroke-width": "1.5"},
    "point": {"fill": "#000000", "r": "4"},
    "curve": {"stroke": "#1f77b4", "stroke-width": "2", "fill": "none"},
}


def _attrs(style: dict) -> str:
    return " ".join(f'{k}="{v}"' for k, v in style.items())


def render_svg(scene: Scene, resolution: int = 200) -> str:
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    frame = _Frame(scene.viewport)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" '
        f'viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}">',
        f'<rect x="0" y="0" width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" fill="#ffffff"/>',
    ]
    for el in scene.elements:
        style = {**_DEFAULT[el.kind], **el.style}
        if el.kind == "line":
            seg = clip_line(el.obj, scene.viewport)
            if seg is None:
                continue
            (ax, ay), (bx, by) = (frame.to_canvas(*p) for p in seg)
            out.append(
                f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" {_attrs(style)}/>'
            )
        elif el.kind == "point":
            if not el.obj.is_finite:
                continue
            x, y = (float(v) for v in el.obj.affine_coords())
            cx, cy = frame.to_canvas(x, y)
            r = style.pop("r")
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{r}" {_attrs(style)}/>')
        elif el.kind == "curve":
            segs = contour_segments(el.obj, scene.viewport, resolution)
            if not segs:
                continue
            d = " ".join(
                "M {} {} L {} {}".format(
                    *(_fmt(v) for v in frame.to_canvas(*a)), *(_fmt(v) for v in frame.to_canvas(*b))
                )
                for a, b in segs
            )
            out.append(f'<path d="{d}" {_attrs(style)}/>')
        else:
            raise ValueError(f"unknown element kind {el.kind!r}")
    out.append("</svg>")
    return "\n".join(out) + "\n"


RED, BLUE, GREEN = "#d62728", "#1f77b4", "#2ca02c"


def fit_viewport(points: Sequence[ProjPoint], margin: float = 0.25):
    finite = [tuple(float(v) for v in p.affine_coords()) for p in points if p.is_finite]
    xs = [x for x, _ in finite] or [0.0]
    ys = [y for _, y in finite] or [0.0]
    w = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    pad = margin * w
    return (min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)


def cage_scene(cage, curves: Sequence[HomPoly] = (), viewport=None) -> Scene:
    """Red and blue lines, node markers, and optional curves through the nodes."""
    nodes = cage.all_nodes()
    scene = Scene(viewport or fit_viewport(nodes))
    for L in cage.reds:
        scene.add_line(L, stroke=RED)
    for L in cage.blues:
        scene.add_line(L, stroke=BLUE)
    for P in curves:
        scene.add_curve(P, stroke=GREEN)
    for p in nodes:
        scene.add_point(p)
    return scene


def gram_scene(result, conic: HomPoly, viewport=None) -> Scene:
    """The conic, the polygon's cage, the curve through the new nodes, all nodes."""
    nodes = result.cage.all_nodes()
    scene = Scene(viewport or fit_viewport(nodes))
    for L in result.cage.reds:
        scene.add_line(L, stroke=RED)
    for L in result.cage.blues:
        scene.add_line(L, stroke=BLUE)
    scene.add_curve(conic, stroke="#000000")
    if result.qstar is not None:
        if result.qstar.degree == 1:
            scene.add_line(Line(result.qstar), stroke=GREEN, **{"stroke-width": "2.5"})
        else:
            scene.add_curve(result.qstar, stroke=GREEN)
    for p in result.vertex_nodes:
        scene.add_point(p, fill="#000000")
    for p in result.new_nodes:
        scene.add_point(p, fill=GREEN)
    return scene

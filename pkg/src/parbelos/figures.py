"""Deterministic SVG scenes for parabola, arbelos and parbelos constructions.

Model coordinates have y pointing up. The flip to SVG's downward y happens
once, in a group transform, so every ``cx``/``cy``/``points`` value in the
output is a model coordinate printed with six decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from . import arbelos as arb
from . import parbelos as pbl
from .euclid import Circle, Point, circumcircle, distance, line_intersection
from .parabola import VerticalParabola

__all__ = [
    "FIGURE_NAMES",
    "Style",
    "ParabolaArc",
    "CircleElement",
    "Segment",
    "Polyline",
    "Region",
    "Marker",
    "Scene",
    "render_scene",
    "figure",
]

FIGURE_NAMES = (
    "arbelos",
    "parbelos",
    "parabola",
    "similar-parbeloses",
    "arbelos-rectangle",
    "parallelogram",
    "tangent-rectangle",
    "rectangle-circle",
    "two-circumcircles",
    "arbelos-parbelos",
    "locus",
)

MARGIN = 0.06
Box = Tuple[float, float, float, float]


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


@dataclass(frozen=True)
class Style:
    stroke_width: float = 1.5
    font_size: float = 13.0
    width: int = 640


@dataclass(frozen=True)
class ParabolaArc:
    parabola: VerticalParabola
    x0: float
    x1: float
    samples: int = 128
    bezier: bool = False
    dashed: bool = False
    color: str = "#000000"

    def points(self) -> List[Point]:
        xs = np.linspace(self.x0, self.x1, self.samples)
        return [self.parabola.point_at(float(x)) for x in xs]

    def control_point(self) -> Point:
        """Quadratic Bezier control point: where the end tangents meet."""
        return line_intersection(self.parabola.tangent_at(self.x0), self.parabola.tangent_at(self.x1))

    def bbox(self) -> Box:
        xs = [self.x0, self.x1]
        ys = [self.parabola.eval(self.x0), self.parabola.eval(self.x1)]
        fx = self.parabola.focus.x
        if self.x0 < fx < self.x1:
            ys.append(self.parabola.vertex.y)
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class CircleElement:
    circle: Circle
    dashed: bool = False
    color: str = "#000000"

    def bbox(self) -> Box:
        c, r = self.circle.center, self.circle.radius
        return c.x - r, c.y - r, c.x + r, c.y + r


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point
    dashed: bool = False
    color: str = "#000000"

    def bbox(self) -> Box:
        return min(self.p.x, self.q.x), min(self.p.y, self.q.y), max(self.p.x, self.q.x), max(self.p.y, self.q.y)


@dataclass(frozen=True)
class Polyline:
    points: Tuple[Point, ...]
    closed: bool = False
    dashed: bool = False
    color: str = "#000000"

    def bbox(self) -> Box:
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Region:
    """Filled polygon, drawn without stroke beneath the line work."""

    points: Tuple[Point, ...]
    fill: str = "#d9d9d9"

    def bbox(self) -> Box:
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Marker:
    """A labelled point. ``witness`` names the record and key it came from."""

    point: Point
    label: str = ""
    witness: Optional[Tuple[str, str]] = None

    def bbox(self) -> Box:
        return self.point.x, self.point.y, self.point.x, self.point.y


Element = Union[ParabolaArc, CircleElement, Segment, Polyline, Region, Marker]


def _union(boxes: Sequence[Box]) -> Box:
    return (
        min(b[0] for b in boxes),
        min(b[1] for b in boxes),
        max(b[2] for b in boxes),
        max(b[3] for b in boxes),
    )


def _padded(box: Box, frac: float) -> Box:
    x0, y0, x1, y1 = box
    pad = frac * max(x1 - x0, y1 - y0, 1e-12)
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


@dataclass
class Scene:
    elements: List[Element] = field(default_factory=list)
    viewbox: Optional[Box] = None
    style: Style = field(default_factory=Style)

    def add(self, *els: Element) -> "Scene":
        self.elements.extend(els)
        return self

    def content_bbox(self) -> Box:
        return _union([e.bbox() for e in self.elements])

    def resolved_viewbox(self) -> Box:
        need = _padded(self.content_bbox(), 0.05)
        if self.viewbox is None:
            return _padded(self.content_bbox(), MARGIN)
        x0, y0, x1, y1 = self.viewbox
        if x0 > need[0] or y0 > need[1] or x1 < need[2] or y1 < need[3]:
            raise ValueError("viewbox does not contain the scene with a 5% margin")
        return self.viewbox

    def markers(self) -> List[Marker]:
        return [e for e in self.elements if isinstance(e, Marker)]


def _stroke(color: str, width: float, dashed: bool, unit: float) -> str:
    """Stroke attributes; ``width`` is in output pixels, ``unit`` is model units per pixel."""
    dash = f' stroke-dasharray="{_fmt(6 * unit)} {_fmt(4 * unit)}"' if dashed else ""
    return f'fill="none" stroke="{color}" stroke-width="{_fmt(width * unit)}"{dash}'



def _points_attr(points: Sequence[Point]) -> str:
    return " ".join(f"{_fmt(p.x)},{_fmt(p.y)}" for p in points)


def render_scene(s: Scene) -> str:
    """SVG 1.1 text for ``s``; identical scenes give identical bytes."""
    if not s.elements:
        raise ValueError("nothing to render")
    x0, y0, x1, y1 = s.resolved_viewbox()
    w, h = x1 - x0, y1 - y0
    st = s.style
    height = max(1, int(round(st.width * h / w)))
    unit = w / st.width  # model units per output pixel
    font = st.font_size * unit
    dot = 2.5 * unit

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{st.width}" height="{height}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}">',
        '<g transform="scale(1,-1)">',
    ]
    regions = [e for e in s.elements if isinstance(e, Region)]
    others = [e for e in s.elements if not isinstance(e, (Region, Marker))]
    for e in regions:
        out.append(f'<polygon points="{_points_attr(e.points)}" fill="{e.fill}" stroke="none"/>')
    for e in others:
        if isinstance(e, ParabolaArc):
            style = _stroke(e.color, st.stroke_width, e.dashed, unit)
            if e.bezier:
                a, b = e.parabola.point_at(e.x0), e.parabola.point_at(e.x1)
                c = e.control_point()
                d = f"M {_fmt(a.x)} {_fmt(a.y)} Q {_fmt(c.x)} {_fmt(c.y)} {_fmt(b.x)} {_fmt(b.y)}"
                out.append(f'<path class="parabola" d="{d}" {style}/>')
            else:
                out.append(f'<polyline class="parabola" points="{_points_attr(e.points())}" {style}/>')
        elif isinstance(e, CircleElement):
            c = e.circle
            out.append(f'<circle cx="{_fmt(c.center.x)}" cy="{_fmt(c.center.y)}" r="{_fmt(c.radius)}" '
                       f'{_stroke(e.color, st.stroke_width, e.dashed, unit)}/>')
        elif isinstance(e, Segment):
            out.append(f'<line x1="{_fmt(e.p.x)}" y1="{_fmt(e.p.y)}" x2="{_fmt(e.q.x)}" y2="{_fmt(e.q.y)}" '
                       f'{_stroke(e.color, st.stroke_width, e.dashed, unit)}/>')
        elif isinstance(e, Polyline):
            tag = "polygon" if e.closed else "polyline"
            out.append(f'<{tag} points="{_points_attr(e.points)}" {_stroke(e.color, st.stroke_width, e.dashed, unit)}/>')
        else:
            raise TypeError(f"unknown scene element {type(e).__name__}")
    for m in s.markers():
        attrs = f' data-label={quoteattr(m.label)}'
        if m.witness is not None:
            attrs += f' data-record={quoteattr(m.witness[0])} data-witness={quoteattr(m.witness[1])}'
        out.append(f'<circle class="marker" cx="{_fmt(m.point.x)}" cy="{_fmt(m.point.y)}" r="{_fmt(dot)}" '
                   f'fill="#000000"{attrs}/>')
        if m.label:
            tx, ty = m.point.x + 1.5 * dot, m.point.y + 1.5 * dot
            out.append(f'<text x="{_fmt(tx)}" y="{_fmt(-ty)}" transform="scale(1,-1)" '
                       f'font-family="serif" font-size="{_fmt(font)}">{escape(m.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- figure builders ---------------------------------------------------------

def _arc(P: VerticalParabola, samples: int, bezier: bool, **kw) -> ParabolaArc:
    return ParabolaArc(P, P.left_end.x, P.right_end.x, samples=samples, bezier=bezier, **kw)


def _semicircle_points(semi: arb.Semicircle, samples: int) -> Tuple[Point, ...]:
    return tuple(semi.point_at(float(t)) for t in np.linspace(math.pi, 0.0, samples))


def _parbelos_region(pb: pbl.Parbelos, samples: int) -> Region:
    up = _arc(pb.upper, samples, False).points()
    left = _arc(pb.lower_left, samples, False).points()
    right = _arc(pb.lower_right, samples, False).points()
    return Region(tuple(up + right[::-1][1:] + left[::-1][1:-1]))


def _arbelos_region(ar: arb.Arbelos, samples: int) -> Region:
    up = list(_semicircle_points(ar.upper, samples))
    le = list(_semicircle_points(ar.left, samples))
    ri = list(_semicircle_points(ar.right, samples))
    return Region(tuple(up + ri[::-1][1:] + le[::-1][1:-1]))


def _parbelos_arcs(pb: pbl.Parbelos, samples: int, bezier: bool, **kw) -> List[ParabolaArc]:
    return [_arc(P, samples, bezier, **kw) for P in (pb.upper, pb.lower_left, pb.lower_right)]


def _arbelos_arcs(ar: arb.Arbelos, samples: int, **kw) -> List[Polyline]:
    return [Polyline(_semicircle_points(s, samples), **kw) for s in ar.semicircles]


def _cusp_markers(cusps) -> List[Marker]:
    return [Marker(c, f"C{i + 1}") for i, c in enumerate(cusps)]


def _quad(q, **kw) -> Polyline:
    return Polyline(tuple(q.vertices), closed=True, **kw)


def figure(name: str, cusps: Sequence[float] = (0.0, 1.0, 4.0), samples: int = 128,
           bezier: bool = False) -> Scene:
    """Scene for one of :data:`FIGURE_NAMES` built from the given cusps.

    The ``parabola`` figure uses only the outer cusps, as latus rectum ends.
    """
    if name not in FIGURE_NAMES:
        raise ValueError(f"unknown figure {name!r}")
    x1, x2, x3 = (float(c) for c in cusps)
    pb = pbl.from_cusps(x1, x2, x3)
    ar = arb.from_cusps_arbelos(x1, x2, x3)
    s = Scene()

    if name == "arbelos":
        s.add(_arbelos_region(ar, samples), *_arbelos_arcs(ar, samples), *_cusp_markers(ar.cusps))

    elif name == "parbelos":
        s.add(_parbelos_region(pb, samples), *_parbelos_arcs(pb, samples, bezier), *_cusp_markers(pb.cusps))

    elif name == "parabola":
        P = pb.upper
        a, f = P.a, P.focus
        s.add(ParabolaArc(P, f.x - 2.8 * a, f.x + 2.8 * a, samples=samples, color="#888888"))
        s.add(_arc(P, samples, bezier))
        s.add(Segment(P.left_end, P.right_end, dashed=True))
        s.add(Segment(Point(f.x - 2.8 * a, P.directrix_y), Point(f.x + 2.8 * a, P.directrix_y)))
        s.add(Segment(f, Point(f.x, P.directrix_y), dashed=True, color="#888888"))
        s.add(Marker(f, "F"), Marker(P.vertex, "V"), Marker(P.left_end, "C1"), Marker(P.right_end, "C2"),
              Marker(Point(f.x + 2.8 * a, P.directrix_y), "L"))

    elif name == "similar-parbeloses":
        left, right = pbl.subdivide_similar(pb)
        s.add(_parbelos_region(pb, samples), _parbelos_region(left, samples), _parbelos_region(right, samples))
        for q in (pb, left, right):
            s.add(*_parbelos_arcs(q, samples, bezier))
        s.add(*_cusp_markers(pb.cusps))

    elif name == "arbelos-rectangle":
        rect = arb.cusp_midpoints_rectangle(ar)
        s.add(_arbelos_region(ar, samples), *_arbelos_arcs(ar, samples), _quad(rect, color="#1f4e9c"))
        s.add(*_cusp_markers(ar.cusps))
        s.add(*(Marker(p, lab) for p, lab in zip(rect.vertices[1:], ("M1", "M2", "M3"))))

    elif name == "parallelogram":
        rec = pbl.parallelogram_checks(pb)[-1]
        quad = pbl.cusp_vertices_parallelogram(pb)
        s.add(_parbelos_region(pb, samples), *_parbelos_arcs(pb, samples, bezier), _quad(quad, color="#1f4e9c"))
        s.add(*_cusp_markers(pb.cusps))
        s.add(*(Marker(rec.witness_points[k], k, (rec.property_name, k)) for k in ("V1", "V2", "V3")))

    elif name == "tangent-rectangle":
        rect = pbl.tangent_rectangle(pb)
        rec = pbl.diagonal_tangency(pb)
        _, t1, _, t3 = rect.vertices
        contact = rec.witness_points["contact"]
        s.add(_parbelos_region(pb, samples), *_parbelos_arcs(pb, samples, bezier), _quad(rect, color="#1f4e9c"))
        s.add(Segment(t1, t3, color="#b22222"), Segment(pb.cusps[1], contact, dashed=True, color="#b22222"))
        s.add(*_cusp_markers(pb.cusps))
        s.add(*(Marker(p, lab) for p, lab in zip(rect.vertices[1:], ("T1", "T2", "T3"))))
        s.add(Marker(contact, "", (rec.property_name, "contact")))

    elif name == "rectangle-circle":
        rect = pbl.tangent_rectangle(pb)
        circle, rec = pbl.rectangle_circumcircle(pb)
        s.add(_parbelos_region(pb, samples), *_parbelos_arcs(pb, samples, bezier), _quad(rect, color="#1f4e9c"))
        s.add(CircleElement(circle, color="#b22222"))
        s.add(*_cusp_markers(pb.cusps))
        s.add(Marker(rec.witness_points["focus"], "F", (rec.property_name, "focus")))
        s.add(Marker(rec.witness_points["center"], "", (rec.property_name, "center")))

    elif name == "two-circumcircles":
        _, tl, tr = pbl.common_lower_tangent(pb)
        tri_l, tri_r, recs = pbl.lower_tangent_triangles(pb)
        s.add(_parbelos_region(pb, samples), *_parbelos_arcs(pb, samples, bezier))
        s.add(Polyline(tri_l, closed=True, color="#1f4e9c"), Polyline(tri_r, closed=True, color="#1f4e9c"))
        for rec in recs[:2]:
            w = rec.witness_points
            s.add(CircleElement(Circle(w["center"], distance(w["center"], w["Q1"])), dashed=True, color="#b22222"))
            s.add(Marker(rec.witness_points["focus"], "F", (rec.property_name, "focus")))
            s.add(Marker(rec.witness_points["center"], "", (rec.property_name, "center")))
        s.add(Marker(tl, ""), Marker(tr, ""), *_cusp_markers(pb.cusps))

    elif name == "arbelos-parbelos":
        rect = arb.cusp_midpoints_rectangle(ar)
        rec = [r for r in arb.arbelos_checks(ar, pb) if r.property_name == "rectangle_circle_through_upper_center"][0]
        center = rec.witness_points["center"]
        v = rect.vertices
        s.add(_arbelos_region(ar, samples), *_arbelos_arcs(ar, samples), _quad(rect, color="#1f4e9c"))
        s.add(CircleElement(circumcircle(v[1], v[2], v[3]), color="#b22222"))
        s.add(*_cusp_markers(ar.cusps))
        s.add(Marker(rec.witness_points["upper_center"], "O", (rec.property_name, "upper_center")))
        s.add(Marker(center, "", (rec.property_name, "center")))

    elif name == "locus":
        s.add(*_arbelos_arcs(ar, samples))
        s.add(*_parbelos_arcs(pb, samples, bezier, dashed=True, color="#1f4e9c"))
        fam = arb.InscribedCircleFamily(ar.upper)
        R = ar.upper.radius
        for u in (-0.6 * R, 0.0, 0.45 * R):
            c = arb.inscribed_circle(fam, u)
            s.add(CircleElement(c, color="#888888"), Marker(c.center, ""))
        s.add(Marker(ar.upper.center, "O"), *_cusp_markers(ar.cusps))

    return s

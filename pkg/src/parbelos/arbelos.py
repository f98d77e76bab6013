"""The arbelos over the same cusps, and circles inscribed in its semicircles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .euclid import Circle, Point, Quadrilateral, circumcircle, distance, is_rectangle, shoelace_area
from .numeric import ToleranceContext
from .parabola import VerticalParabola
from .parbelos import Parbelos, tangent_rectangle
from .records import VerificationRecord, make_record

__all__ = [
    "Semicircle",
    "Arbelos",
    "InscribedCircleFamily",
    "from_cusps_arbelos",
    "arbelos_area",
    "cusp_midpoints_rectangle",
    "inscribed_circle",
    "locus_equivalence",
    "arbelos_checks",
]


@dataclass(frozen=True)
class Semicircle:
    """Upper half of a circle whose diameter lies on the cusp line."""

    center: Point
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    @property
    def midpoint(self) -> Point:
        """Top of the arc."""
        return Point(self.center.x, self.center.y + self.radius)

    @property
    def ends(self) -> Tuple[Point, Point]:
        c, r = self.center, self.radius
        return Point(c.x - r, c.y), Point(c.x + r, c.y)

    def point_at(self, theta: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(theta), self.center.y + self.radius * math.sin(theta))

    def parabola(self) -> VerticalParabola:
        """Parabola whose latus rectum is this diameter."""
        return VerticalParabola(*self.ends)


@dataclass(frozen=True)
class Arbelos:
    cusps: Tuple[Point, Point, Point]
    upper: Semicircle
    left: Semicircle
    right: Semicircle

    @property
    def semicircles(self) -> Tuple[Semicircle, Semicircle, Semicircle]:
        return self.upper, self.left, self.right

    @property
    def scale(self) -> float:
        return 2.0 * self.upper.radius


def from_cusps_arbelos(x1: float, x2: float, x3: float, y: float = 0.0) -> Arbelos:
    if not (x1 < x2 < x3):
        raise ValueError("cusps not strictly ordered")

    def semi(u: float, v: float) -> Semicircle:
        return Semicircle(Point(0.5 * (u + v), y), 0.5 * (v - u))

    return Arbelos(
        cusps=(Point(x1, y), Point(x2, y), Point(x3, y)),
        upper=semi(x1, x3),
        left=semi(x1, x2),
        right=semi(x2, x3),
    )


def arbelos_area(ar: Arbelos) -> float:
    # r_upper = r_left + r_right, so the half-disc difference collapses.
    return math.pi * ar.left.radius * ar.right.radius


def cusp_midpoints_rectangle(ar: Arbelos) -> Quadrilateral:
    return Quadrilateral((ar.cusps[1], ar.left.midpoint, ar.upper.midpoint, ar.right.midpoint))


@dataclass(frozen=True)
class InscribedCircleFamily:
    """Circles tangent to a semicircle's diameter and internally tangent to its arc.

    Members are indexed by the horizontal offset ``u`` of their center from
    the host center, ``-R < u < R``.
    """

    host: Semicircle

    def radius(self, u: float) -> float:
        R = self.host.radius
        return (R * R - u * u) / (2.0 * R)


def inscribed_circle(fam: InscribedCircleFamily, u: float) -> Circle:
    R = fam.host.radius
    if not abs(u) < R:
        raise ValueError("parameter at or beyond cusp")
    r = fam.radius(u)
    o = fam.host.center
    return Circle(Point(o.x + u, o.y + r), r)


def _grid(R: float, n: int) -> np.ndarray:
    return -R + 2.0 * R * np.arange(1, n + 1) / (n + 1)


def locus_equivalence(
    ar: Arbelos, pb: Parbelos, ctx: ToleranceContext | None = None, samples: int = 101
) -> Tuple[VerificationRecord, ...]:
    """Inscribed-circle centers of each semicircle trace the matching latus arc.

    Forward: every sampled center lies on the parabola. Backward: every
    sampled arc point, taken as a center with radius equal to its height,
    gives a circle internally tangent to the semicircle. Each record carries
    the worst residual over both directions.
    """
    if tuple(ar.cusps) != tuple(pb.cusps):
        raise ValueError("arbelos and parbelos must share cusps")
    ctx = ctx or pb.tolerance_context()
    pairs = (
        ("locus_upper", ar.upper, pb.upper),
        ("locus_left", ar.left, pb.lower_left),
        ("locus_right", ar.right, pb.lower_right),
    )
    out = []
    for name, semi, par in pairs:
        fam = InscribedCircleFamily(semi)
        o, R = semi.center, semi.radius
        u = _grid(R, samples)
        x = o.x + u
        # Forward: inscribed centers lie on the arc.
        r = fam.radius(u)
        fwd = np.abs(par.eval(x) - (o.y + r))
        # Backward: an arc point at height h is the center of a circle of
        # radius h internally tangent to the semicircle.
        h = par.eval(x) - o.y
        bwd = np.abs(np.hypot(u, h) - (R - h))
        worst = float(max(fwd.max(), bwd.max()))
        apex = inscribed_circle(fam, 0.0).center
        out.append(make_record(name, worst, 0.0, ctx.tolerance(ctx.scale),
                               {"center": o, "vertex": par.vertex, "apex_center": apex},
                               group=7, residual=worst))
    return tuple(out)


def arbelos_checks(ar: Arbelos, pb: Parbelos, ctx: ToleranceContext | None = None) -> Tuple[VerificationRecord, ...]:
    """Facts tying the arbelos to its parbelos.

    The semicircles touch pairwise at the cusps; the arbelos area is pi/2
    times its cusp-midpoints rectangle; that rectangle is the parbelos
    tangent rectangle; its circumcircle passes through the upper center.
    """
    ctx = ctx or pb.tolerance_context()
    out = []
    up, le, ri = ar.upper, ar.left, ar.right
    touching = max(
        abs(distance(up.center, le.center) - (up.radius - le.radius)),
        abs(distance(up.center, ri.center) - (up.radius - ri.radius)),
        abs(distance(le.center, ri.center) - (le.radius + ri.radius)),
    )
    out.append(make_record("arbelos_semicircles_touch", touching, 0.0, ctx.tolerance(ctx.scale),
                           group=6, residual=touching))
    rect = cusp_midpoints_rectangle(ar)
    rect_ctx = ToleranceContext(rel_tol=ctx.rel_tol, scale=ar.scale)
    out.append(make_record("cusp_midpoints_is_rectangle", float(is_rectangle(rect, rect_ctx)), 1.0, 0.0, group=6))
    ratio = arbelos_area(ar) / shoelace_area(rect)
    out.append(make_record("arbelos_area_over_rectangle", ratio, math.pi / 2.0, ctx.rel_tol * math.pi / 2.0, group=6))
    tr = tangent_rectangle(pb)
    gap = max(distance(p, q) for p, q in zip(rect.vertices, tr.vertices))
    out.append(make_record("cusp_midpoints_equals_tangent_rectangle", gap, 0.0, ctx.tolerance(ctx.scale),
                           dict(zip(("C2", "M_left", "M_upper", "M_right"), rect.vertices)),
                           group=6, residual=gap))
    v = rect.vertices
    circ = circumcircle(v[1], v[2], v[3], rect_ctx)
    out.append(make_record("rectangle_circle_through_upper_center", distance(circ.center, up.center), circ.radius,
                           ctx.tolerance(circ.radius), {"center": circ.center, "upper_center": up.center},
                           group=6))
    return tuple(out)

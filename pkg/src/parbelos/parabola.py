"""Downward-opening parabolas with a vertical axis, built from a latus rectum.

With the focus at ``(fx, y0)`` and ``a`` the focus-to-vertex distance the
curve is ``y = y0 + a - (x - fx)**2 / (4a)``. The latus rectum is the chord
``[fx - 2a, fx + 2a]`` on ``y = y0``, the vertex sits at ``y0 + a`` and the
directrix at ``y0 + 2a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .euclid import Line, Point, circumcircle, distance, line_intersection
from .numeric import ToleranceContext, arc_length_quadrature
from .records import VerificationRecord, make_record

__all__ = [
    "VerticalParabola",
    "LatusArc",
    "from_latus_rectum",
    "parabolic_constant",
    "lambert_check",
]


def parabolic_constant() -> float:
    """Latus rectum arc length divided by the semi-latus rectum."""
    return math.sqrt(2.0) + math.asinh(1.0)


@dataclass(frozen=True)
class VerticalParabola:
    left_end: Point
    right_end: Point

    def __post_init__(self):
        if not self.left_end.x < self.right_end.x:
            raise ValueError("latus rectum endpoints must satisfy left_end.x < right_end.x")

    @cached_property
    def a(self) -> float:
        return (self.right_end.x - self.left_end.x) / 4.0

    @property
    def p(self) -> float:
        return 2.0 * self.a

    @property
    def latus_rectum_length(self) -> float:
        return 4.0 * self.a

    @cached_property
    def focus(self) -> Point:
        return Point(0.5 * (self.left_end.x + self.right_end.x), self.left_end.y)

    @property
    def vertex(self) -> Point:
        return Point(self.focus.x, self.focus.y + self.a)

    @property
    def directrix_y(self) -> float:
        return self.focus.y + 2.0 * self.a

    @property
    def directrix(self) -> Line:
        return Line.from_slope(0.0, self.directrix_y)

    def tolerance_context(self, rel_tol: float | None = None) -> ToleranceContext:
        if rel_tol is None:
            return ToleranceContext(scale=self.latus_rectum_length)
        return ToleranceContext(rel_tol=rel_tol, scale=self.latus_rectum_length)

    def eval(self, x: float) -> float:
        t = x - self.focus.x
        return self.focus.y + self.a - t * t / (4.0 * self.a)

    def point_at(self, x: float) -> Point:
        return Point(x, self.eval(x))

    def slope_at(self, x: float) -> float:
        return -(x - self.focus.x) / (2.0 * self.a)

    def tangent_at(self, x: float) -> Line:
        return Line.point_slope(self.point_at(x), self.slope_at(x))

    def tangent_with_slope(self, m: float) -> Line:
        fx, vy, a = self.focus.x, self.vertex.y, self.a
        return Line.from_slope(m, vy + a * m * m - m * fx)

    def touch_x(self, m: float) -> float:
        """Abscissa where the tangent of slope ``m`` touches."""
        return self.focus.x - 2.0 * self.a * m

    def contact_discriminant(self, line: Line) -> float:
        """Discriminant of the monic quadratic for line/parabola intersection.

        It equals the squared gap between the two intersection abscissae, so
        it has units of length squared and vanishes exactly for a tangent.
        Vertical lines cross once and are never tangent (``inf``).
        """
        if line.is_vertical:
            return math.inf
        a, m = self.a, line.slope
        # Line intercept measured in focus-centred coordinates.
        k = line.intercept + m * self.focus.x - self.focus.y
        return 16.0 * a * (a * m * m + a - k)

    def is_tangent(self, line: Line, ctx: ToleranceContext | None = None) -> bool:
        if line.is_vertical:
            return False
        ctx = ctx or self.tolerance_context()
        expected = self.tangent_with_slope(line.slope).intercept
        return abs(line.intercept - expected) <= ctx.tolerance(max(abs(line.intercept), abs(expected)))

    def latus_arc_length(self) -> float:
        return self.p * parabolic_constant()

    def _arc_primitive(self, x: float) -> float:
        u = (x - self.focus.x) / (2.0 * self.a)
        return self.a * (u * math.sqrt(1.0 + u * u) + math.asinh(u))

    def arc_length_between(self, x0: float, x1: float) -> float:
        if not x0 < x1:
            raise ValueError("require x0 < x1")
        return self._arc_primitive(x1) - self._arc_primitive(x0)

    def arc_length_oracle(self, x0: float, x1: float, tol: float = 1e-12) -> float:
        """Same arc length by adaptive quadrature, for cross-checking."""
        return arc_length_quadrature(self.slope_at, x0, x1, tol)

    def segment_area(self, x0: float, x1: float) -> float:
        """Area between the chord over ``[x0, x1]`` and the arc."""
        if not x0 < x1:
            raise ValueError("require x0 < x1")
        w = x1 - x0
        return w * w * w / (24.0 * self.a)

    def inscribed_triangle(self, x0: float, x1: float):
        """Chord ends and the arc point where the tangent is parallel to the chord."""
        return self.point_at(x0), self.point_at(0.5 * (x0 + x1)), self.point_at(x1)

    def inscribed_triangle_area(self, x0: float, x1: float) -> float:
        # Cross product of the two edges from the first chord end, with the
        # common t0 terms cancelled algebraically: h*w*(w - h) / (8a).
        h = 0.5 * (x0 + x1) - x0
        w = x1 - x0
        return abs(h * w * (w - h)) / (8.0 * self.a)

    def latus_arc(self) -> "LatusArc":
        return LatusArc(self)


@dataclass(frozen=True)
class LatusArc:
    parabola: VerticalParabola

    @property
    def endpoints(self):
        return self.parabola.left_end, self.parabola.right_end

    @property
    def length(self) -> float:
        return self.parabola.latus_arc_length()


def from_latus_rectum(e1: Point, e2: Point, ctx: ToleranceContext | None = None) -> VerticalParabola:
    """The downward-opening parabola whose latus rectum is the chord e1-e2."""
    if e1 == e2 or e1.x == e2.x:
        raise ValueError("coincident endpoints")
    left, right = (e1, e2) if e1.x < e2.x else (e2, e1)
    ctx = ctx or ToleranceContext(scale=right.x - left.x)
    if abs(left.y - right.y) > ctx.tolerance(max(abs(left.y), abs(right.y))):
        raise ValueError("latus rectum not horizontal")
    y = 0.5 * (left.y + right.y)
    return VerticalParabola(Point(left.x, y), Point(right.x, y))


def lambert_check(
    P: VerticalParabola,
    l1: Line,
    l2: Line,
    l3: Line,
    ctx: ToleranceContext | None = None,
    name: str = "lambert",
    group: int = 6,
) -> VerificationRecord:
    """Check that the circumcircle of a tangent triangle passes through the focus."""
    ctx = ctx or P.tolerance_context()
    lines = (l1, l2, l3)
    for ln in lines:
        if not P.is_tangent(ln, ctx):
            raise ValueError("line not tangent")
    slopes = [ln.slope for ln in lines]
    for i in range(3):
        for j in range(i + 1, 3):
            if slopes[i] == slopes[j]:
                raise ValueError("parallel tangent lines")
    q1 = line_intersection(l1, l2)
    q2 = line_intersection(l2, l3)
    q3 = line_intersection(l3, l1)
    circle = circumcircle(q1, q2, q3, ctx)
    d = distance(circle.center, P.focus)
    return make_record(
        name,
        d,
        circle.radius,
        ctx.tolerance(circle.radius),
        {"focus": P.focus, "center": circle.center, "Q1": q1, "Q2": q2, "Q3": q3},
        group=group,
    )

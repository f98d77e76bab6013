"""Points, lines, circles and quadrilaterals in the plane."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .numeric import ToleranceContext, _require_finite

__all__ = [
    "Point",
    "Line",
    "Circle",
    "Quadrilateral",
    "distance",
    "cross",
    "triangle_area",
    "shoelace_area",
    "circumcircle",
    "is_parallelogram",
    "is_rectangle",
    "point_on_circle",
    "line_intersection",
    "line_tangent_to_circle",
    "triangle_angles",
]


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        _require_finite(self.x, self.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def cross(u: Point, v: Point) -> float:
    return u.x * v.y - u.y * v.x


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True)
class Line:
    """A line, either ``y = slope*x + intercept`` or vertical ``x = x_const``.

    Exactly one representation is active; use the constructors rather than
    the raw fields.
    """

    slope: Optional[float] = None
    intercept: Optional[float] = None
    x_const: Optional[float] = None

    def __post_init__(self):
        if self.x_const is None:
            if self.slope is None or self.intercept is None:
                raise ValueError("line needs slope and intercept, or x_const")
            _require_finite(self.slope, self.intercept)
        else:
            if self.slope is not None or self.intercept is not None:
                raise ValueError("vertical line takes only x_const")
            _require_finite(self.x_const)

    @classmethod
    def from_slope(cls, m: float, k: float) -> "Line":
        return cls(slope=m, intercept=k)

    @classmethod
    def vertical(cls, x: float) -> "Line":
        return cls(x_const=x)

    @classmethod
    def point_slope(cls, p: Point, m: float) -> "Line":
        return cls(slope=m, intercept=p.y - m * p.x)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p == q:
            raise ValueError("coincident points")
        dx = q.x - p.x
        if dx == 0:
            return cls.vertical(p.x)
        return cls.point_slope(p, (q.y - p.y) / dx)

    @property
    def is_vertical(self) -> bool:
        return self.x_const is not None

    def y_at(self, x: float) -> float:
        if self.is_vertical:
            raise ValueError("vertical line has no y(x)")
        return self.slope * x + self.intercept

    def direction(self) -> Point:
        """Unit direction vector, pointing right (or up when vertical)."""
        if self.is_vertical:
            return Point(0.0, 1.0)
        n = math.hypot(1.0, self.slope)
        return Point(1.0 / n, self.slope / n)

    def distance_to(self, p: Point) -> float:
        if self.is_vertical:
            return abs(p.x - self.x_const)
        return abs(self.slope * p.x - p.y + self.intercept) / math.hypot(1.0, self.slope)

    def contains(self, p: Point, ctx: ToleranceContext | None = None) -> bool:
        ctx = ctx or ToleranceContext()
        return self.distance_to(p) <= ctx.tolerance(max(abs(p.x), abs(p.y)))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        _require_finite(self.radius)
        if self.radius <= 0:
            raise ValueError("radius must be positive")


def triangle_area(p1: Point, p2: Point, p3: Point) -> float:
    """Signed area, positive for counter-clockwise order."""
    return 0.5 * cross(p2 - p1, p3 - p1)


def _segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    d1 = cross(p2 - p1, q1 - p1)
    d2 = cross(p2 - p1, q2 - p1)
    d3 = cross(q2 - q1, p1 - q1)
    d4 = cross(q2 - q1, p2 - q1)
    return (d1 * d2 < 0) and (d3 * d4 < 0)


@dataclass(frozen=True)
class Quadrilateral:
    """Four distinct vertices in cyclic order forming a simple polygon."""

    vertices: Tuple[Point, Point, Point, Point]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) != 4:
            raise ValueError("quadrilateral needs exactly four vertices")
        object.__setattr__(self, "vertices", vs)
        if len(set(vs)) != 4:
            raise ValueError("degenerate polygon")
        if _segments_cross(vs[0], vs[1], vs[2], vs[3]) or _segments_cross(vs[1], vs[2], vs[3], vs[0]):
            raise ValueError("self-intersecting polygon")

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> Tuple[Point, Point, Point, Point]:
        v = self.vertices
        return tuple(v[(i + 1) % 4] - v[i] for i in range(4))

    def diameter(self) -> float:
        v = self.vertices
        return max(distance(v[i], v[j]) for i in range(4) for j in range(i + 1, 4))


def _polygon_area(vertices: Sequence[Point]) -> float:
    # Translate to the first vertex to keep cancellation out of large offsets.
    o = vertices[0]
    rel = [v - o for v in vertices]
    s = 0.0
    for i in range(len(rel)):
        s += cross(rel[i], rel[(i + 1) % len(rel)])
    return 0.5 * s


def shoelace_area(q: Quadrilateral, ctx: ToleranceContext | None = None) -> float:
    area = abs(_polygon_area(q.vertices))
    ctx = ctx or ToleranceContext(scale=q.diameter())
    if area <= ctx.abs_floor * ctx.scale ** 2:
        raise ValueError("degenerate polygon")
    return area


def circumcircle(p1: Point, p2: Point, p3: Point, ctx: ToleranceContext | None = None) -> Circle:
    """Circle through three non-collinear points.

    Coordinates are taken relative to the centroid so the result does not
    depend on argument order beyond rounding.
    """
    if ctx is None:
        ctx = ToleranceContext(scale=max(distance(p1, p2), distance(p2, p3), distance(p1, p3)) or 1.0)
    if abs(triangle_area(p1, p2, p3)) <= ctx.abs_floor * ctx.scale ** 2:
        raise ValueError("collinear points")
    g = Point((p1.x + p2.x + p3.x) / 3.0, (p1.y + p2.y + p3.y) / 3.0)
    a, b, c = p1 - g, p2 - g, p3 - g
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    aa, bb, cc = a.dot(a), b.dot(b), c.dot(c)
    ux = (aa * (b.y - c.y) + bb * (c.y - a.y) + cc * (a.y - b.y)) / d
    uy = (aa * (c.x - b.x) + bb * (a.x - c.x) + cc * (b.x - a.x)) / d
    u = Point(ux, uy)
    r = (distance(u, a) + distance(u, b) + distance(u, c)) / 3.0
    return Circle(u + g, r)


def is_parallelogram(q: Quadrilateral, ctx: ToleranceContext | None = None) -> bool:
    ctx = ctx or ToleranceContext(scale=q.diameter())
    shoelace_area(q, ctx)
    e = q.edges()
    for u, v in ((e[0], e[2]), (e[1], e[3])):
        if (u + v).norm() > ctx.tolerance(max(u.norm(), v.norm())):
            return False
    return True


def is_rectangle(q: Quadrilateral, ctx: ToleranceContext | None = None) -> bool:
    ctx = ctx or ToleranceContext(scale=q.diameter())
    if not is_parallelogram(q, ctx):
        return False
    e0, e1 = q.edges()[:2]
    return abs(e0.dot(e1)) <= ctx.rel_tol * e0.norm() * e1.norm()


def point_on_circle(p: Point, c: Circle, ctx: ToleranceContext | None = None) -> bool:
    ctx = ctx or ToleranceContext(scale=c.radius)
    return abs(distance(p, c.center) - c.radius) <= ctx.tolerance(c.radius)


def line_intersection(l1: Line, l2: Line) -> Point:
    if l1.is_vertical and l2.is_vertical:
        raise ValueError("parallel lines")
    if l1.is_vertical:
        return Point(l1.x_const, l2.y_at(l1.x_const))
    if l2.is_vertical:
        return Point(l2.x_const, l1.y_at(l2.x_const))
    dm = l1.slope - l2.slope
    if dm == 0:
        raise ValueError("parallel lines")
    x = (l2.intercept - l1.intercept) / dm
    # Evaluate on the shallower line to limit error amplification.
    y = l1.y_at(x) if abs(l1.slope) <= abs(l2.slope) else l2.y_at(x)
    return Point(x, y)


def line_tangent_to_circle(line: Line, c: Circle, ctx: ToleranceContext | None = None) -> bool:
    ctx = ctx or ToleranceContext(scale=c.radius)
    return abs(line.distance_to(c.center) - c.radius) <= ctx.tolerance(c.radius)


def triangle_angles(p1: Point, p2: Point, p3: Point) -> Tuple[float, float, float]:
    """Interior angles at p1, p2, p3 in radians."""
    def angle(at: Point, u: Point, v: Point) -> float:
        a, b = u - at, v - at
        return math.atan2(abs(cross(a, b)), a.dot(b))

    return angle(p1, p2, p3), angle(p2, p3, p1), angle(p3, p1, p2)

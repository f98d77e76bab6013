"""The parbelos: three latus rectum arcs over three collinear cusps.

Geometry is computed in normalized coordinates, with the first cusp at the
origin and the cusp line on the x-axis. In these coordinates the cusps are
``(0, 0)``, ``(2b, 0)`` and ``(4a, 0)``. Results are translated back to the
caller's coordinates on the way out.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Tuple

from .euclid import (
    Circle,
    Line,
    Point,
    Quadrilateral,
    circumcircle,
    distance,
    is_parallelogram,
    is_rectangle,
    line_intersection,
    shoelace_area,
    triangle_angles,
    triangle_area,
)
from .numeric import ToleranceContext, solve_quadratic
from .parabola import VerticalParabola, lambert_check
from .records import VerificationRecord, make_record

__all__ = [
    "Parbelos",
    "from_cusps",
    "cusp_tangency_report",
    "boundary_lengths",
    "subdivide_similar",
    "cusp_vertices_parallelogram",
    "parbelos_area",
    "tangent_rectangle",
    "diagonal_contact",
    "diagonal_tangency",
    "rectangle_circumcircle",
    "common_lower_tangent",
    "lower_tangent_triangles",
    "parallelogram_checks",
    "rectangle_checks",
]

Triangle = Tuple[Point, Point, Point]


@dataclass(frozen=True)
class Parbelos:
    cusps: Tuple[Point, Point, Point]
    upper: VerticalParabola
    lower_left: VerticalParabola
    lower_right: VerticalParabola

    @property
    def a(self) -> float:
        return (self.cusps[2].x - self.cusps[0].x) / 4.0

    @property
    def b(self) -> float:
        return (self.cusps[1].x - self.cusps[0].x) / 2.0

    @property
    def origin(self) -> Point:
        return self.cusps[0]

    @property
    def scale(self) -> float:
        """Outer latus rectum length."""
        return self.cusps[2].x - self.cusps[0].x

    @property
    def ratio(self) -> float:
        """Division ratio of the middle cusp, in (0, 1)."""
        return (self.cusps[1].x - self.cusps[0].x) / self.scale

    @property
    def cusp_xs(self) -> Tuple[float, float, float]:
        return tuple(c.x for c in self.cusps)

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        """Vertices of the lower-left, upper and lower-right parabolas."""
        return self.lower_left.vertex, self.upper.vertex, self.lower_right.vertex

    @property
    def foci(self) -> Tuple[Point, Point, Point]:
        return self.lower_left.focus, self.upper.focus, self.lower_right.focus

    @cached_property
    def normalized(self) -> "Parbelos":
        if self.origin == Point(0.0, 0.0):
            return self
        c1, c2, c3 = self.cusp_xs
        return from_cusps(0.0, c2 - c1, c3 - c1)

    def to_world(self, p: Point) -> Point:
        return p + self.origin

    def line_to_world(self, line: Line) -> Line:
        o = self.origin
        if line.is_vertical:
            return Line.vertical(line.x_const + o.x)
        return Line.from_slope(line.slope, line.intercept - line.slope * o.x + o.y)

    def tolerance_context(self, rel_tol: float | None = None) -> ToleranceContext:
        if rel_tol is None:
            return ToleranceContext(scale=self.scale)
        return ToleranceContext(rel_tol=rel_tol, scale=self.scale)


def from_cusps(x1: float, x2: float, x3: float, y: float = 0.0) -> Parbelos:
    if not (x1 < x2 < x3):
        raise ValueError("cusps not strictly ordered")
    c1, c2, c3 = Point(x1, y), Point(x2, y), Point(x3, y)
    return Parbelos(
        cusps=(c1, c2, c3),
        upper=VerticalParabola(c1, c3),
        lower_left=VerticalParabola(c1, c2),
        lower_right=VerticalParabola(c2, c3),
    )


def _ctx(pb: Parbelos, ctx: ToleranceContext | None) -> ToleranceContext:
    return ctx or pb.tolerance_context()


def _world_record(pb: Parbelos, rec: VerificationRecord, **changes) -> VerificationRecord:
    witness = {k: pb.to_world(p) for k, p in rec.witness_points.items()}
    return replace(rec, witness_points=witness, **changes)


def cusp_tangency_report(pb: Parbelos, ctx: ToleranceContext | None = None) -> Tuple[VerificationRecord, ...]:
    """Slopes of the meeting arcs at each cusp.

    The outer arc shares its tangent with each inner arc at C1 (slope +1) and
    C3 (slope -1). At C2 the inner arcs meet at a right angle (slopes -1 and
    +1), so they are not tangent to each other. Each record passes when both
    slopes match those values.
    """
    ctx = _ctx(pb, ctx)
    c1, c2, c3 = pb.cusps
    checks = (
        ("cusp_C1_tangent", c1, pb.upper, pb.lower_left, 1.0, 1.0),
        ("cusp_C2_not_tangent", c2, pb.lower_left, pb.lower_right, -1.0, 1.0),
        ("cusp_C3_tangent", c3, pb.upper, pb.lower_right, -1.0, -1.0),
    )
    out = []
    for name, c, first, second, e1, e2 in checks:
        s1, s2 = first.slope_at(c.x), second.slope_at(c.x)
        residual = max(abs(s1 - e1), abs(s2 - e2))
        out.append(make_record(name, s1, s2, ctx.rel_tol, {"cusp": c}, group=4, residual=residual))
    return tuple(out)


def boundary_lengths(pb: Parbelos) -> Tuple[float, float]:
    upper = pb.upper.latus_arc_length()
    lower = pb.lower_left.latus_arc_length() + pb.lower_right.latus_arc_length()
    return upper, lower


def subdivide_similar(pb: Parbelos) -> Tuple[Parbelos, Parbelos]:
    """Parbeloses similar to ``pb`` drawn under each of its lower arcs."""
    x1, x2, x3 = pb.cusp_xs
    y = pb.origin.y
    r = pb.ratio
    left = from_cusps(x1, x1 + r * (x2 - x1), x2, y)
    right = from_cusps(x2, x2 + r * (x3 - x2), x3, y)
    return left, right


def cusp_vertices_parallelogram(pb: Parbelos) -> Quadrilateral:
    v1, v2, v3 = pb.vertices
    return Quadrilateral((pb.cusps[1], v1, v2, v3))


def parbelos_area(pb: Parbelos) -> float:
    n = pb.normalized
    x1, x2, x3 = n.cusp_xs
    return (
        n.upper.segment_area(x1, x3)
        - n.lower_left.segment_area(x1, x2)
        - n.lower_right.segment_area(x2, x3)
    )


def _tangent_rectangle_normalized(pb: Parbelos) -> Tuple[Point, Point, Point, Point]:
    n = pb.normalized
    c1, c2, c3 = n.cusps
    up_c1 = n.upper.tangent_at(c1.x)
    up_c3 = n.upper.tangent_at(c3.x)
    left_c2 = n.lower_left.tangent_at(c2.x)
    right_c2 = n.lower_right.tangent_at(c2.x)
    t1 = line_intersection(up_c1, left_c2)
    t2 = line_intersection(up_c1, up_c3)
    t3 = line_intersection(up_c3, right_c2)
    return c2, t1, t2, t3


def tangent_rectangle(pb: Parbelos) -> Quadrilateral:
    """Rectangle C2, T1, T2, T3 cut out by the four cusp tangents."""
    return Quadrilateral(tuple(pb.to_world(p) for p in _tangent_rectangle_normalized(pb)))


def diagonal_contact(pb: Parbelos) -> Tuple[Line, Point, float]:
    """The diagonal T1-T3, its contact point with the upper arc, and the
    contact discriminant (length squared, normalized coordinates)."""
    n = pb.normalized
    _, t1, _, t3 = _tangent_rectangle_normalized(pb)
    diag = Line.through(t1, t3)
    disc = n.upper.contact_discriminant(diag)
    contact = n.upper.point_at(n.upper.touch_x(diag.slope))
    return pb.line_to_world(diag), pb.to_world(contact), disc


def diagonal_tangency(pb: Parbelos, ctx: ToleranceContext | None = None) -> VerificationRecord:
    """The diagonal opposite C2 touches the upper arc above C2.

    The vertical through C2 bisects the right angle between the two inner
    tangents there, so the contact abscissa must equal C2.x. The residual is
    the larger of that offset and ``|discriminant| / scale``.
    """
    ctx = _ctx(pb, ctx)
    _, contact, disc = diagonal_contact(pb)
    c2 = pb.cusps[1]
    _, t1, _, t3 = tangent_rectangle(pb).vertices
    residual = max(abs(contact.x - c2.x), abs(disc) / pb.scale)
    return make_record(
        "diagonal_tangency",
        contact.x,
        c2.x,
        ctx.tolerance(pb.scale),
        {"contact": contact, "T1": t1, "T3": t3, "C2": c2},
        group=5,
        residual=residual,
    )


def rectangle_circumcircle(
    pb: Parbelos, ctx: ToleranceContext | None = None
) -> Tuple[Circle, VerificationRecord]:
    """Circumcircle of the tangent rectangle and whether the upper focus is on it."""
    ctx = _ctx(pb, ctx)
    n = pb.normalized
    _, t1, t2, t3 = _tangent_rectangle_normalized(pb)
    circ = circumcircle(t1, t2, t3, n.tolerance_context(ctx.rel_tol))
    focus = n.upper.focus
    rec = make_record(
        "rectangle_circle_through_focus",
        distance(circ.center, focus),
        circ.radius,
        ctx.tolerance(circ.radius),
        {"center": circ.center, "focus": focus, "C2": n.cusps[1]},
        group=6,
    )
    return Circle(pb.to_world(circ.center), circ.radius), _world_record(pb, rec)


def _common_tangent_slope(n: Parbelos) -> float:
    # Equal tangent intercepts for both inner parabolas:
    # (b - a)(m^2 + 1) + 2a m = 0
    a, b = n.a, n.b
    c = b - a
    if c == 0:
        candidates = [0.0]
    else:
        roots = solve_quadratic(c, 2.0 * a, c)
        candidates = list(roots.roots) if roots.is_real else []
    c1, c2, c3 = n.cusp_xs
    for m in candidates:
        xl = n.lower_left.touch_x(m)
        xr = n.lower_right.touch_x(m)
        if c1 < xl < c2 and c2 < xr < c3:
            return m
    raise RuntimeError("no admissible root")


def common_lower_tangent(pb: Parbelos) -> Tuple[Line, Point, Point]:
    """Line tangent to both inner arcs, with its two touch points."""
    n = pb.normalized
    m = _common_tangent_slope(n)
    line = n.lower_left.tangent_with_slope(m)
    tl = n.lower_left.point_at(n.lower_left.touch_x(m))
    tr = n.lower_right.point_at(n.lower_right.touch_x(m))
    return pb.line_to_world(line), pb.to_world(tl), pb.to_world(tr)


def _normalized_lower_triangles(n: Parbelos) -> Tuple[Line, Dict[str, Line]]:
    m = _common_tangent_slope(n)
    c1, c2, c3 = n.cusps
    common = n.lower_left.tangent_with_slope(m)
    sides = {
        "left_c1": n.lower_left.tangent_at(c1.x),
        "left_c2": n.lower_left.tangent_at(c2.x),
        "right_c2": n.lower_right.tangent_at(c2.x),
        "right_c3": n.lower_right.tangent_at(c3.x),
    }
    return common, sides


def lower_tangent_triangles(
    pb: Parbelos, ctx: ToleranceContext | None = None
) -> Tuple[Triangle, Triangle, Tuple[VerificationRecord, ...]]:
    """Tangent triangles of the two inner arcs sharing the common tangent.

    Returns both triangles (world coordinates) and three records: each
    circumcircle passes through its parabola's focus, and the triangles have
    equal angle sets.
    """
    ctx = _ctx(pb, ctx)
    n = pb.normalized
    common, s = _normalized_lower_triangles(n)
    ll, lr = n.lower_left, n.lower_right
    rec_l = lambert_check(ll, s["left_c1"], s["left_c2"], common, ll.tolerance_context(ctx.rel_tol),
                          name="lower_left_tangent_triangle_focus")
    rec_r = lambert_check(lr, s["right_c2"], s["right_c3"], common, lr.tolerance_context(ctx.rel_tol),
                          name="lower_right_tangent_triangle_focus")
    tri_l = tuple(rec_l.witness_points[k] for k in ("Q1", "Q2", "Q3"))
    tri_r = tuple(rec_r.witness_points[k] for k in ("Q1", "Q2", "Q3"))
    ang_l = sorted(triangle_angles(*tri_l))
    ang_r = sorted(triangle_angles(*tri_r))
    worst = max(abs(x - y) for x, y in zip(ang_l, ang_r))
    rec_sim = make_record("lower_tangent_triangles_similar", ang_l[0], ang_r[0], ctx.rel_tol,
                          group=6, residual=worst)
    records = (
        _world_record(pb, rec_l),
        _world_record(pb, rec_r),
        rec_sim,
    )
    tri_l = tuple(pb.to_world(p) for p in tri_l)
    tri_r = tuple(pb.to_world(p) for p in tri_r)
    return tri_l, tri_r, records


def parallelogram_checks(pb: Parbelos, ctx: ToleranceContext | None = None) -> Tuple[VerificationRecord, ...]:
    """Shape and area checks for the cusp-vertices parallelogram.

    C1, V1, V2 lie on a line of slope 1/2, as do C2, V3; C3, V3, V2 and
    C2, V1 lie on lines of slope -1/2. The parbelos area is 4/3 of the
    parallelogram area.
    """
    ctx = _ctx(pb, ctx)
    n = pb.normalized
    c1, c2, c3 = n.cusps
    v1, v2, v3 = n.vertices
    slope = lambda p, q: (q.y - p.y) / (q.x - p.x)
    runs = (
        ("slope_C1_V1", slope(c1, v1), 0.5),
        ("slope_V1_V2", slope(v1, v2), 0.5),
        ("slope_C2_V3", slope(c2, v3), 0.5),
        ("slope_C3_V3", slope(c3, v3), -0.5),
        ("slope_V3_V2", slope(v3, v2), -0.5),
        ("slope_C2_V1", slope(c2, v1), -0.5),
    )
    out = [make_record(name, s, e, ctx.rel_tol, group=3) for name, s, e in runs]
    quad = Quadrilateral((c2, v1, v2, v3))
    ok = is_parallelogram(quad, n.tolerance_context(ctx.rel_tol))
    out.append(make_record("cusp_vertices_is_parallelogram", float(ok), 1.0, 0.0, group=3))
    area = parbelos_area(n)
    para = shoelace_area(quad)
    out.append(make_record(
        "area_over_parallelogram",
        area / para,
        4.0 / 3.0,
        ctx.rel_tol * 4.0 / 3.0,
        {"C2": pb.cusps[1], "V1": pb.vertices[0], "V2": pb.vertices[1], "V3": pb.vertices[2]},
        group=3,
    ))
    return tuple(out)


def rectangle_checks(pb: Parbelos, ctx: ToleranceContext | None = None) -> Tuple[VerificationRecord, ...]:
    """The cusp tangents bound a rectangle with 3/2 the parbelos area.

    Each of the three triangles whose difference is the rectangle has twice
    the area of its counterpart for the parallelogram.
    """
    ctx = _ctx(pb, ctx)
    n = pb.normalized
    c1, c2, c3 = n.cusps
    v1, v2, v3 = n.vertices
    c2_, t1, t2, t3 = _tangent_rectangle_normalized(pb)
    quad = Quadrilateral((c2_, t1, t2, t3))
    ok = is_rectangle(quad, n.tolerance_context(ctx.rel_tol))
    out = [make_record("tangent_rectangle_is_rectangle", float(ok), 1.0, 0.0, group=4)]
    pairs = (
        ("triangle_C1T2C3_over_C1V2C3", (c1, t2, c3), (c1, v2, c3)),
        ("triangle_C1T1C2_over_C1V1C2", (c1, t1, c2), (c1, v1, c2)),
        ("triangle_C2T3C3_over_C2V3C3", (c2, t3, c3), (c2, v3, c3)),
    )
    for name, tri_t, tri_v in pairs:
        ratio = abs(triangle_area(*tri_t)) / abs(triangle_area(*tri_v))
        out.append(make_record(name, ratio, 2.0, ctx.rel_tol * 2.0, group=4))
    area = parbelos_area(n)
    rect = shoelace_area(quad)
    world = tangent_rectangle(pb).vertices
    out.append(make_record(
        "area_over_rectangle",
        area / rect,
        2.0 / 3.0,
        ctx.rel_tol * 2.0 / 3.0,
        {"C2": world[0], "T1": world[1], "T2": world[2], "T3": world[3]},
        group=4,
    ))
    return tuple(out)

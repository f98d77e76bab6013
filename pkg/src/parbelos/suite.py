"""Run the numbered property checks on one parbelos and collect derived values."""

from __future__ import annotations

from typing import Dict, Iterable, List, Tuple

import numpy as np

from . import arbelos as arb
from . import parbelos as pbl
from .euclid import shoelace_area
from .numeric import ToleranceContext
from .parabola import VerticalParabola, lambert_check, parabolic_constant
from .records import VerificationRecord, make_record

__all__ = [
    "ALL_PROPERTIES",
    "parse_properties",
    "run_properties",
    "derived_quantities",
    "random_cusp_triples",
    "random_tangent_abscissae",
    "harmonic_mean",
]

ALL_PROPERTIES = (1, 2, 3, 4, 5, 6, 7)
LAMBERT_TRIPLES = 8


def parse_properties(spec: str) -> Tuple[int, ...]:
    """``"all"`` or a comma separated list such as ``"1,3,5"``."""
    if spec.strip().lower() == "all":
        return ALL_PROPERTIES
    out = set()
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        n = int(tok)
        if n not in ALL_PROPERTIES:
            raise ValueError(f"unknown property {n}")
        out.add(n)
    if not out:
        raise ValueError("empty property list")
    return tuple(sorted(out))


def harmonic_mean(x: float, y: float) -> float:
    return 2.0 / (1.0 / x + 1.0 / y)


def random_cusp_triples(n: int, seed: int = 0, low: float = -10.0, high: float = 10.0,
                        min_gap: float = 1e-3) -> List[Tuple[float, float, float]]:
    """Uniform cusp triples, sorted, rejecting any gap below ``min_gap * span``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        x1, x2, x3 = sorted(float(v) for v in rng.uniform(low, high, 3))
        span = x3 - x1
        if span <= 0 or min(x2 - x1, x3 - x2) < min_gap * span:
            continue
        out.append((x1, x2, x3))
    return out


def random_tangent_abscissae(rng: np.random.Generator, P: VerticalParabola,
                             min_gap: float = 1e-3) -> Tuple[float, float, float]:
    """Three tangency abscissae on the latus arc, pairwise separated."""
    lo, hi = P.left_end.x, P.right_end.x
    while True:
        xs = sorted(float(v) for v in rng.uniform(lo, hi, 3))
        if min(xs[1] - xs[0], xs[2] - xs[1]) >= min_gap * (hi - lo):
            return tuple(xs)


def _arc_length_records(pb: pbl.Parbelos, ctx: ToleranceContext) -> List[VerificationRecord]:
    upper, lower = pbl.boundary_lengths(pb)
    n = pb.normalized
    oracle = n.upper.arc_length_oracle(n.upper.left_end.x, n.upper.right_end.x)
    return [
        make_record("boundary_lengths_equal", upper, lower, ctx.tolerance(upper), group=1),
        make_record("upper_arc_closed_form_vs_quadrature", upper, oracle, 1e-10 * upper, group=1),
    ]


def _subdivision_records(pb: pbl.Parbelos, ctx: ToleranceContext) -> List[VerificationRecord]:
    left, right = pbl.subdivide_similar(pb)
    l_left = pb.lower_left.latus_arc_length()
    l_right = pb.lower_right.latus_arc_length()
    l2 = left.lower_right.latus_arc_length()
    l3 = right.lower_left.latus_arc_length()
    half_hm = 0.5 * harmonic_mean(l_left, l_right)
    return [
        make_record("middle_subarcs_congruent", l2, l3, ctx.tolerance(l2), group=2),
        make_record("middle_subarc_half_harmonic_mean", l2, half_hm, ctx.tolerance(half_hm), group=2),
        make_record("subparbeloses_similar", left.ratio, right.ratio, ctx.rel_tol, group=2),
    ]


def _lambert_records(pb: pbl.Parbelos, ctx: ToleranceContext, seed: int) -> List[VerificationRecord]:
    n = pb.normalized
    up = n.upper
    diag, _, _ = pbl.diagonal_contact(n)
    c1, _, c3 = n.cusps
    rec = lambert_check(up, up.tangent_at(c1.x), up.tangent_at(c3.x), diag,
                        up.tolerance_context(ctx.rel_tol), name="upper_tangent_triangle_focus")
    out = [pbl._world_record(pb, rec)]
    rng = np.random.default_rng(seed)
    worst, tol = 0.0, 0.0
    for _ in range(LAMBERT_TRIPLES):
        xs = random_tangent_abscissae(rng, up)
        r = lambert_check(up, *(up.tangent_at(x) for x in xs), up.tolerance_context(ctx.rel_tol))
        if r.residual >= worst:
            worst, tol = r.residual, r.tolerance_used
    out.append(make_record(f"lambert_random_triples_seed_{seed}", worst, 0.0, tol, group=6, residual=worst))
    return out


def run_properties(pb: pbl.Parbelos, properties: Iterable[int] = ALL_PROPERTIES,
                   ctx: ToleranceContext | None = None, seed: int = 0) -> List[VerificationRecord]:
    ctx = ctx or pb.tolerance_context()
    props = set(properties)
    records: List[VerificationRecord] = []
    if 1 in props:
        records += _arc_length_records(pb, ctx)
    if 2 in props:
        records += _subdivision_records(pb, ctx)
    if 3 in props:
        records += pbl.parallelogram_checks(pb, ctx)
    if 4 in props:
        records += pbl.cusp_tangency_report(pb, ctx)
        records += pbl.rectangle_checks(pb, ctx)
    if 5 in props:
        records.append(pbl.diagonal_tangency(pb, ctx))
    if 6 in props:
        records.append(pbl.rectangle_circumcircle(pb, ctx)[1])
        records += _lambert_records(pb, ctx, seed)
        records += pbl.lower_tangent_triangles(pb, ctx)[2]
        ar = arb.from_cusps_arbelos(*pb.cusp_xs, y=pb.origin.y)
        records += arb.arbelos_checks(ar, pb, ctx)
    if 7 in props:
        ar = arb.from_cusps_arbelos(*pb.cusp_xs, y=pb.origin.y)
        records += arb.locus_equivalence(ar, pb, ctx)
    return records


def derived_quantities(pb: pbl.Parbelos) -> Dict[str, float]:
    n = pb.normalized
    area = pbl.parbelos_area(pb)
    para = shoelace_area(pbl.cusp_vertices_parallelogram(n))
    rect = shoelace_area(pbl.tangent_rectangle(n))
    upper, lower = pbl.boundary_lengths(pb)
    circle, _ = pbl.rectangle_circumcircle(pb)
    line, touch_l, touch_r = pbl.common_lower_tangent(pb)
    ar = arb.from_cusps_arbelos(*pb.cusp_xs, y=pb.origin.y)
    return {
        "a": pb.a,
        "b": pb.b,
        "parabolic_constant": parabolic_constant(),
        "upper_arc": upper,
        "lower_arc_sum": lower,
        "parbelos_area": area,
        "parallelogram_area": para,
        "area_over_parallelogram": area / para,
        "rectangle_area": rect,
        "area_over_rectangle": area / rect,
        "circumcenter_x": circle.center.x,
        "circumcenter_y": circle.center.y,
        "circumradius": circle.radius,
        "common_tangent_slope": line.slope,
        "common_tangent_intercept": line.intercept,
        "common_tangent_touch_left_x": touch_l.x,
        "common_tangent_touch_right_x": touch_r.x,
        "arbelos_area": arb.arbelos_area(ar),
    }

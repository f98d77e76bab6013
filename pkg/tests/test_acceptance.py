"""Acceptance criteria, one test each, at their stated tolerances.

Run directly (``python3 tests/test_acceptance.py``) for a plain pass/fail
listing, or through pytest, which prints the same listing at the end.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from parbelos import arbelos as arb
from parbelos import parbelos as pbl
from parbelos.cli import main
from parbelos.euclid import Point, distance, is_rectangle, shoelace_area, triangle_angles
from parbelos.figures import FIGURE_NAMES
from parbelos.parabola import VerticalParabola, lambert_check
from parbelos.suite import harmonic_mean, random_cusp_triples, random_tangent_abscissae

# Arc length of the latus arc with p = 1, from mpmath at 30 digits.
UPC_ORACLE = 2.29558714939263807403
N_RANDOM = 1000
SEED = 0


def _triples():
    return [pbl.from_cusps(*c) for c in random_cusp_triples(N_RANDOM, seed=SEED)]


TRIPLES = _triples()


def _line(n, ok, detail):
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def test_criterion_01_parabolic_constant():
    t0 = time.perf_counter()
    P = VerticalParabola(Point(-1.0, 0.0), Point(1.0, 0.0))
    assert P.p == 1.0
    closed = P.latus_arc_length()
    quad = P.arc_length_oracle(-1.0, 1.0)
    elapsed = time.perf_counter() - t0
    err = max(abs(closed - quad), abs(closed - UPC_ORACLE), abs(quad - UPC_ORACLE))
    assert _line(1, err < 1e-10 and elapsed < 1.0, f"max error {err:.2e}, {elapsed:.3f} s")


def test_criterion_02_equal_boundary_lengths():
    worst = 0.0
    for pb in TRIPLES:
        upper, lower = pbl.boundary_lengths(pb)
        worst = max(worst, abs(upper - lower) / upper)
    assert _line(2, worst < 1e-9, f"worst relative gap {worst:.2e} over {len(TRIPLES)} triples")


def test_criterion_03_middle_subarcs():
    worst = 0.0
    for pb in TRIPLES:
        left, right = pbl.subdivide_similar(pb)
        l2 = left.lower_right.latus_arc_length()
        l3 = right.lower_left.latus_arc_length()
        hm = 0.5 * harmonic_mean(pb.lower_left.latus_arc_length(), pb.lower_right.latus_arc_length())
        worst = max(worst, abs(l2 - l3) / l3, abs(l2 - hm) / hm)
    left, _ = pbl.subdivide_similar(pbl.from_cusps(0, 1, 4))
    worked = left.lower_right.latus_arc_length()
    err = abs(worked - 0.375 * UPC_ORACLE) / (0.375 * UPC_ORACLE)
    assert _line(3, worst < 1e-9 and err < 1e-9, f"worst relative {worst:.2e}, worked case error {err:.2e}")


def test_criterion_04_area_over_parallelogram():
    worst = 0.0
    for pb in TRIPLES:
        r = pbl.parbelos_area(pb) / shoelace_area(pbl.cusp_vertices_parallelogram(pb))
        worst = max(worst, abs(r - 4 / 3) / (4 / 3))
    area = pbl.parbelos_area(pbl.from_cusps(0, 1, 4))
    assert _line(4, worst < 1e-9 and abs(area - 1.0) <= 1e-12,
                 f"worst relative {worst:.2e}, worked area {area!r}")


def test_criterion_05_area_over_rectangle():
    worst, rect_ok = 0.0, True
    for pb in TRIPLES:
        rect = pbl.tangent_rectangle(pb)
        rect_ok &= is_rectangle(rect, pb.tolerance_context())
        r = pbl.parbelos_area(pb) / shoelace_area(rect)
        worst = max(worst, abs(r - 2 / 3) / (2 / 3))
    assert _line(5, worst < 1e-9 and rect_ok, f"worst relative {worst:.2e}, all rectangles {rect_ok}")


def test_criterion_06_diagonal_double_contact():
    worst_disc, worst_x = 0.0, 0.0
    for pb in TRIPLES:
        _, contact, disc = pbl.diagonal_contact(pb)
        worst_disc = max(worst_disc, abs(disc) / pb.scale ** 2)
        worst_x = max(worst_x, abs(contact.x - pb.cusps[1].x) / pb.scale)
    assert _line(6, worst_disc < 1e-10 and worst_x < 1e-9,
                 f"disc/scale^2 {worst_disc:.2e}, contact offset/scale {worst_x:.2e}")


def test_criterion_07_rectangle_circle_through_focus():
    worst, worst_c = 0.0, 0.0
    for pb in TRIPLES:
        circle, _ = pbl.rectangle_circumcircle(pb)
        worst = max(worst, abs(distance(circle.center, pb.upper.focus) - circle.radius) / pb.scale)
        nc, _ = pbl.rectangle_circumcircle(pb.normalized)
        worst_c = max(worst_c, distance(nc.center, Point(pb.a + pb.b, pb.a)))
    assert _line(7, worst < 1e-9 and worst_c < 1e-12,
                 f"focus residual/scale {worst:.2e}, normalized center error {worst_c:.2e}")


def test_criterion_08_lambert():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(N_RANDOM):
        fx, fy = rng.uniform(-10, 10, 2)
        a = rng.uniform(0.05, 5)
        P = VerticalParabola(Point(fx - 2 * a, fy), Point(fx + 2 * a, fy))
        xs = random_tangent_abscissae(rng, P)
        rec = lambert_check(P, *(P.tangent_at(x) for x in xs))
        worst = max(worst, rec.residual / P.latus_rectum_length)
    assert _line(8, worst < 1e-9, f"worst residual/scale {worst:.2e} over {N_RANDOM} triangles")


def test_criterion_09_common_tangent():
    pb = pbl.from_cusps(0, 1, 4)
    line, _, _ = pbl.common_lower_tangent(pb)
    slope_err = abs(line.slope - (2 - math.sqrt(3)))
    disc = max(abs(pb.lower_left.contact_discriminant(line)), abs(pb.lower_right.contact_discriminant(line)))
    tri_l, tri_r, recs = pbl.lower_tangent_triangles(pb)
    foci_ok = (recs[0].witness_points["focus"] == Point(0.5, 0) and recs[1].witness_points["focus"] == Point(2.5, 0))
    focus_res = max(recs[0].residual, recs[1].residual) / pb.scale
    angle_err = max(abs(x - y) for x, y in zip(sorted(triangle_angles(*tri_l)), sorted(triangle_angles(*tri_r))))
    ok = slope_err < 1e-12 and disc < 1e-10 and foci_ok and focus_res < 1e-9 and angle_err < 1e-9
    assert _line(9, ok, f"slope error {slope_err:.2e}, disc {disc:.2e}, "
                        f"focus residual/scale {focus_res:.2e}, angle error {angle_err:.2e}")


def test_criterion_10_arbelos_facts():
    worst_ratio, worst_v, worst_o = 0.0, 0.0, 0.0
    for pb in [pbl.from_cusps(0, 1, 4)] + TRIPLES:
        ar = arb.from_cusps_arbelos(*pb.cusp_xs)
        rect = arb.cusp_midpoints_rectangle(ar)
        worst_ratio = max(worst_ratio, abs(arb.arbelos_area(ar) / shoelace_area(rect) / (math.pi / 2) - 1))
        tr = pbl.tangent_rectangle(pb)
        worst_v = max(worst_v, max(distance(p, q) for p, q in zip(rect.vertices, tr.vertices)) / pb.scale)
        rec = [r for r in arb.arbelos_checks(ar, pb) if r.property_name == "rectangle_circle_through_upper_center"][0]
        worst_o = max(worst_o, rec.residual / pb.scale)
    ok = worst_ratio < 1e-12 and worst_v < 1e-12 and worst_o < 1e-9
    assert _line(10, ok, f"ratio {worst_ratio:.2e}, vertex gap/scale {worst_v:.2e}, "
                         f"upper center residual/scale {worst_o:.2e}")


def test_criterion_11_locus():
    worst = 0.0
    for pb in [pbl.from_cusps(0, 1, 4)] + TRIPLES:
        ar = arb.from_cusps_arbelos(*pb.cusp_xs)
        for rec in arb.locus_equivalence(ar, pb, samples=101):
            worst = max(worst, rec.residual / pb.scale)
    assert _line(11, worst < 1e-10, f"worst residual/scale {worst:.2e}, both directions, 101 points per arc")


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "parbelos", *argv], capture_output=True)


def test_criterion_12_determinism(tmp_path, capsys):
    t0 = time.perf_counter()
    runs = [_cli("verify", "--cusps", "0", "1", "4", "--seed", "7") for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].returncode == 0
    for name in FIGURE_NAMES:
        outs = []
        for k in range(2):
            path = tmp_path / f"{name}-{k}.svg"
            main(["render", name, "--seed", "7", "-o", str(path)])
            outs.append(path.read_bytes())
        same &= outs[0] == outs[1]
    capsys.readouterr()
    elapsed = time.perf_counter() - t0
    assert _line(12, same and elapsed < 10.0, f"byte-identical {same}, {elapsed:.2f} s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))

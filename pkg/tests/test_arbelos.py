import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parbelos import arbelos as arb
from parbelos import from_cusps
from parbelos.euclid import Point, distance, is_rectangle, shoelace_area


@pytest.fixture
def ar014():
    return arb.from_cusps_arbelos(0, 1, 4)


def test_semicircles(ar014):
    assert ar014.upper.center == Point(2, 0) and ar014.upper.radius == 2
    assert ar014.left.center == Point(0.5, 0) and ar014.left.radius == 0.5
    assert ar014.right.center == Point(2.5, 0) and ar014.right.radius == 1.5
    assert ar014.upper.midpoint == Point(2, 2)
    with pytest.raises(ValueError, match="cusps not strictly ordered"):
        arb.from_cusps_arbelos(1, 1, 2)


def test_semicircle_parabola_shares_latus(ar014, pb014):
    assert ar014.upper.parabola() == pb014.upper
    assert ar014.left.parabola() == pb014.lower_left


def test_area(ar014):
    assert arb.arbelos_area(ar014) == pytest.approx(0.75 * math.pi, rel=1e-15)
    assert arb.arbelos_area(arb.from_cusps_arbelos(0, 2, 4)) == pytest.approx(math.pi, rel=1e-15)
    # Half-disc difference as an independent check.
    hd = lambda s: 0.5 * math.pi * s.radius ** 2
    assert arb.arbelos_area(ar014) == pytest.approx(hd(ar014.upper) - hd(ar014.left) - hd(ar014.right))


def test_cusp_midpoints_rectangle(ar014, pb014):
    rect = arb.cusp_midpoints_rectangle(ar014)
    assert rect.vertices == (Point(1, 0), Point(0.5, 0.5), Point(2, 2), Point(2.5, 1.5))
    assert is_rectangle(rect)
    assert arb.arbelos_area(ar014) / shoelace_area(rect) == pytest.approx(math.pi / 2)
    recs = arb.arbelos_checks(ar014, pb014)
    assert [r.property_name for r in recs] == [
        "arbelos_semicircles_touch",
        "cusp_midpoints_is_rectangle",
        "arbelos_area_over_rectangle",
        "cusp_midpoints_equals_tangent_rectangle",
        "rectangle_circle_through_upper_center",
    ]
    assert all(r.passed for r in recs)


def test_inscribed_circle(ar014):
    fam = arb.InscribedCircleFamily(ar014.upper)
    c = arb.inscribed_circle(fam, 0.0)
    assert c.center == Point(2, 1) and c.radius == 1
    c = arb.inscribed_circle(fam, 1.0)
    assert c.radius == 0.75 and c.center == Point(3, 0.75)
    # Internally tangent to the arc and touching the diameter.
    assert distance(c.center, ar014.upper.center) == pytest.approx(2 - 0.75)
    for u in (2.0, -2.0, 3.0):
        with pytest.raises(ValueError, match="parameter at or beyond cusp"):
            arb.inscribed_circle(fam, u)


def test_locus_examples(ar014, pb014):
    fam = arb.InscribedCircleFamily(ar014.left)
    assert arb.inscribed_circle(fam, 0.0).center == pb014.vertices[0]
    k = pb014.upper.point_at(1.0)
    assert k == Point(1, 0.75)
    assert distance(k, ar014.upper.center) == pytest.approx(1.25)
    recs = arb.locus_equivalence(ar014, pb014)
    assert [r.property_name for r in recs] == ["locus_upper", "locus_left", "locus_right"]
    assert all(r.passed and r.group == 7 for r in recs)


def test_locus_requires_shared_cusps(ar014):
    with pytest.raises(ValueError):
        arb.locus_equivalence(ar014, from_cusps(0, 2, 4))


triples = st.tuples(
    st.floats(-50, 50), st.floats(0.01, 0.99), st.floats(0.1, 50)
).map(lambda t: (t[0], t[0] + t[1] * t[2], t[0] + t[2]))


@settings(max_examples=100)
@given(triples)
def test_random_invariants(c):
    ar = arb.from_cusps_arbelos(*c)
    pb = from_cusps(*c)
    assert all(r.passed for r in arb.arbelos_checks(ar, pb))
    assert all(r.passed for r in arb.locus_equivalence(ar, pb, samples=21))


@settings(max_examples=100)
@given(triples, st.floats(-0.999, 0.999))
def test_inscribed_center_on_parabola(c, t):
    ar = arb.from_cusps_arbelos(*c)
    pb = from_cusps(*c)
    for semi, par in zip(ar.semicircles, (pb.upper, pb.lower_left, pb.lower_right)):
        circ = arb.inscribed_circle(arb.InscribedCircleFamily(semi), t * semi.radius)
        assert par.eval(circ.center.x) == pytest.approx(circ.center.y, abs=1e-9 * pb.scale)
        assert circ.center.y - semi.center.y == pytest.approx(circ.radius, abs=1e-12 * pb.scale)

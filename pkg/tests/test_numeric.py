import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from parbelos.numeric import (
    QuadratureError,
    ToleranceContext,
    adaptive_simpson,
    approx_eq,
    arc_length_quadrature,
    solve_quadratic,
)

from conftest import UPC

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_approx_eq_examples():
    ctx = ToleranceContext()
    assert approx_eq(1.0, 1.0, ctx)
    assert approx_eq(1.0, 1.0 + 1e-15, ctx)
    assert not approx_eq(1.0, 1.01, ctx)


def test_approx_eq_rejects_nonfinite():
    with pytest.raises(ValueError, match="non-finite operand"):
        approx_eq(math.nan, 1.0)
    with pytest.raises(ValueError, match="non-finite operand"):
        approx_eq(1.0, math.inf)


def test_tolerance_uses_scale_and_floor():
    ctx = ToleranceContext(rel_tol=1e-9, abs_floor=1e-12, scale=100.0)
    assert ctx.tolerance(0.0) == pytest.approx(1e-7)
    assert ctx.tolerance(1e4) == pytest.approx(1e-5)
    tiny = ToleranceContext(rel_tol=1e-9, abs_floor=1e-3, scale=1.0)
    assert tiny.tolerance(1.0) == 1e-3


@pytest.mark.parametrize("kw", [dict(rel_tol=0), dict(abs_floor=-1), dict(scale=0)])
def test_tolerance_context_validates(kw):
    with pytest.raises(ValueError):
        ToleranceContext(**kw)


@given(finite, finite)
def test_approx_eq_symmetric_reflexive(x, y):
    assert approx_eq(x, x)
    assert approx_eq(x, y) == approx_eq(y, x)


def test_quadratic_two_real():
    r = solve_quadratic(1, -4, 1)
    assert r.kind == "two-real"
    lo, hi = r.roots
    assert lo == pytest.approx(2 - math.sqrt(3), abs=1e-15)
    assert hi == pytest.approx(2 + math.sqrt(3), abs=1e-15)
    for m in r.roots:
        assert abs(m * m - 4 * m + 1) < 1e-12


def test_quadratic_double_and_complex():
    assert solve_quadratic(1, -2, 1).kind == "double"
    assert solve_quadratic(1, -2, 1).roots == (1.0, 1.0)
    c = solve_quadratic(1, 0, 1)
    assert c.kind == "complex-pair" and not c.is_real


def test_quadratic_degenerate():
    with pytest.raises(ValueError, match="degenerate quadratic"):
        solve_quadratic(0, 1, 1)


def test_quadratic_avoids_cancellation():
    # Roots 1e8 and 1e-8: the naive formula loses the small one entirely.
    r = solve_quadratic(1.0, -(1e8 + 1e-8), 1.0)
    assert r.roots[0] == pytest.approx(1e-8, rel=1e-12)
    assert r.roots[1] == pytest.approx(1e8, rel=1e-12)


coef = st.floats(min_value=-100, max_value=100, allow_nan=False).filter(lambda v: abs(v) > 1e-3)


@given(coef, coef, coef)
def test_quadratic_residual(c2, c1, c0):
    disc = c1 * c1 - 4 * c2 * c0
    assume(disc > 1e-6 * max(c1 * c1, abs(4 * c2 * c0)))
    r = solve_quadratic(c2, c1, c0)
    assert r.kind == "two-real" and r.roots[0] < r.roots[1]
    scale = max(abs(c2), abs(c1), abs(c0))
    for m in r.roots:
        # Residual relative to the size of the largest term at m.
        size = max(abs(c2 * m * m), abs(c1 * m), abs(c0), scale)
        assert abs(c2 * m * m + c1 * m + c0) <= 1e-10 * size


def test_arc_length_examples():
    assert arc_length_quadrature(lambda x: 0.0, 0.0, 1.0, 1e-12) == pytest.approx(1.0, abs=1e-14)
    assert arc_length_quadrature(lambda x: 1.0, 0.0, 1.0, 1e-12) == pytest.approx(math.sqrt(2), abs=1e-14)
    two_p = arc_length_quadrature(lambda x: -x / 2, -2.0, 2.0, 1e-12)
    assert abs(two_p - 2 * UPC) < 1e-11
    closed = 2 * (math.sqrt(2) + math.log(1 + math.sqrt(2)))
    assert abs(two_p - closed) < 1e-11


def test_quadrature_is_deterministic():
    f = lambda x: -x / 2
    assert arc_length_quadrature(f, -2, 2, 1e-12) == arc_length_quadrature(f, -2, 2, 1e-12)


def test_quadrature_preconditions():
    with pytest.raises(ValueError):
        adaptive_simpson(math.sin, 1.0, 1.0, 1e-9)
    with pytest.raises(ValueError):
        adaptive_simpson(math.sin, 0.0, 1.0, 0.0)


def test_quadrature_reports_nonconvergence():
    # Infinite slope at 0 keeps splitting without meeting an absurd tolerance.
    with pytest.raises(QuadratureError, match="did not converge"):
        adaptive_simpson(lambda x: 1.0 / math.sqrt(x) if x > 0 else 1e300, 0.0, 1.0, 1e-15)


@pytest.mark.parametrize("f, exact, x0, x1", [
    (math.exp, math.e - 1.0, 0.0, 1.0),
    (math.cos, math.sin(3.0), 0.0, 3.0),
    (lambda x: math.sqrt(1 + x * x / 4), 2 * UPC / 2, 0.0, 2.0),
])
def test_tighter_tolerance_never_worse(f, exact, x0, x1):
    errors = [abs(adaptive_simpson(f, x0, x1, tol) - exact) for tol in (1e-4, 5e-5, 2.5e-5, 1e-6, 5e-7, 1e-9, 5e-10)]
    for tol, err in zip((1e-4, 5e-5, 2.5e-5, 1e-6, 5e-7, 1e-9, 5e-10), errors):
        assert err <= tol
    # Monotone up to rounding noise.
    for coarse, fine in zip(errors, errors[1:]):
        assert fine <= coarse + 1e-14


@given(st.floats(min_value=-1.9, max_value=1.9))
def test_quadrature_additive_under_splitting(c):
    tol = 1e-10
    f = lambda x: math.hypot(1.0, x / 2)
    whole = adaptive_simpson(f, -2.0, 2.0, tol)
    parts = adaptive_simpson(f, -2.0, c, tol) + adaptive_simpson(f, c, 2.0, tol)
    assert abs(whole - parts) <= 2 * tol

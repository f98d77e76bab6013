"""Tolerances, stable quadratic roots and adaptive Simpson quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Tuple

__all__ = [
    "ToleranceContext",
    "QuadraticRoots",
    "QuadratureError",
    "approx_eq",
    "solve_quadratic",
    "adaptive_simpson",
    "arc_length_quadrature",
]

DEFAULT_REL_TOL = 1e-9
DEFAULT_ABS_FLOOR = 1e-12

# Hard cap on interval evaluations in adaptive_simpson.
MAX_SUBDIVISIONS = 200_000
MAX_DEPTH = 60


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError("non-finite operand")


@dataclass(frozen=True)
class ToleranceContext:
    """Scale-aware comparison policy.

    A comparison at magnitude ``m`` is accepted when the difference is at
    most ``max(abs_floor, rel_tol * max(m, scale))``. ``scale`` is the
    characteristic length of the figure being checked (for a parbelos, the
    outer latus rectum length).
    """

    rel_tol: float = DEFAULT_REL_TOL
    abs_floor: float = DEFAULT_ABS_FLOOR
    scale: float = 1.0

    def __post_init__(self):
        _require_finite(self.rel_tol, self.abs_floor, self.scale)
        if self.rel_tol <= 0 or self.abs_floor <= 0 or self.scale <= 0:
            raise ValueError("rel_tol, abs_floor and scale must be positive")

    def tolerance(self, magnitude: float = 0.0) -> float:
        return max(self.abs_floor, self.rel_tol * max(abs(magnitude), self.scale))

    def with_scale(self, scale: float) -> "ToleranceContext":
        return replace(self, scale=scale)


def approx_eq(x: float, y: float, ctx: ToleranceContext | None = None) -> bool:
    ctx = ctx or ToleranceContext()
    _require_finite(x, y)
    return abs(x - y) <= ctx.tolerance(max(abs(x), abs(y)))


@dataclass(frozen=True)
class QuadraticRoots:
    """Roots of a real quadratic.

    ``kind`` is one of ``"two-real"``, ``"double"`` or ``"complex-pair"``.
    For real kinds ``roots`` is ascending; for a complex pair it holds
    ``(real part, |imaginary part|)``.
    """

    kind: str
    roots: Tuple[float, float]

    @property
    def is_real(self) -> bool:
        return self.kind != "complex-pair"


def solve_quadratic(c2: float, c1: float, c0: float) -> QuadraticRoots:
    """Solve ``c2*m**2 + c1*m + c0 = 0`` without cancellation.

    The larger-magnitude root comes from ``q = -(c1 + sign(c1)*sqrt(D))/2``
    and the other from the product of roots ``c0/c2``.
    """
    _require_finite(c2, c1, c0)
    if c2 == 0:
        raise ValueError("degenerate quadratic")
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0:
        return QuadraticRoots("complex-pair", (-c1 / (2.0 * c2), math.sqrt(-disc) / abs(2.0 * c2)))
    if disc == 0:
        r = -c1 / (2.0 * c2)
        return QuadraticRoots("double", (r, r))
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    r1 = q / c2
    r2 = c0 / q if q != 0 else -r1
    lo, hi = sorted((r1, r2))
    if lo == hi:
        return QuadraticRoots("double", (lo, hi))
    return QuadraticRoots("two-real", (lo, hi))


class QuadratureError(ArithmeticError):
    pass


def adaptive_simpson(f: Callable[[float], float], x0: float, x1: float, tol: float) -> float:
    """Integrate ``f`` over ``[x0, x1]`` by adaptive Simpson's rule.

    Each panel is accepted once the Richardson estimate ``|S2 - S|/15`` is
    below its share of ``tol``; the accepted value carries the Richardson
    correction. Panels are processed in a fixed left-to-right order so the
    result is deterministic.
    """
    _require_finite(x0, x1, tol)
    if not x0 < x1:
        raise ValueError("require x0 < x1")
    if tol <= 0:
        raise ValueError("tol must be positive")

    fa, fm, fb = f(x0), f(0.5 * (x0 + x1)), f(x1)
    whole = (x1 - x0) * (fa + 4.0 * fm + fb) / 6.0
    # (a, b, fa, fm, fb, whole, tol, depth); stack popped LIFO, right pushed first.
    stack = [(x0, x1, fa, fm, fb, whole, tol, 0)]
    total = 0.0
    evaluations = 0
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        evaluations += 1
        left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
        right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps or (depth >= MAX_DEPTH and abs(delta) <= 15.0 * tol):
            total += left + right + delta / 15.0
            continue
        if depth >= MAX_DEPTH or evaluations >= MAX_SUBDIVISIONS:
            raise QuadratureError("quadrature did not converge")
        stack.append((m, b, fm, frm, fb, right, 0.5 * eps, depth + 1))
        stack.append((a, m, fa, flm, fm, left, 0.5 * eps, depth + 1))
    return total


def arc_length_quadrature(
    f_deriv: Callable[[float], float], x0: float, x1: float, tol: float = 1e-12
) -> float:
    """Length of the graph of a function with derivative ``f_deriv`` on ``[x0, x1]``."""
    return adaptive_simpson(lambda x: math.hypot(1.0, f_deriv(x)), x0, x1, tol)

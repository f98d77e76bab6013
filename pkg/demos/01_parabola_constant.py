"""A parabola built from its latus rectum, and the constant hiding in its arc."""

import math

from parbelos import VerticalParabola, parabolic_constant
from parbelos.euclid import Point

# %% Latus rectum from (-2, 0) to (2, 0): focus at the origin, a = 1.
P = VerticalParabola(Point(-2.0, 0.0), Point(2.0, 0.0))
print("focus", P.focus, "vertex", P.vertex, "directrix y =", P.directrix_y)

# %% Slopes at the latus ends are +1 and -1, so the end tangents meet at right angles.
print("slopes at ends:", P.slope_at(-2.0), P.slope_at(2.0))

# %% Arc length over the latus rectum, closed form against quadrature.
closed = P.latus_arc_length()
quad = P.arc_length_oracle(-2.0, 2.0)
print(f"arc {closed:.15f}  quadrature {quad:.15f}")
print(f"arc / p = {closed / P.p:.15f}  (constant {parabolic_constant():.15f})")

# %% Same ratio for any size. Scale by 7 and shift.
Q = VerticalParabola(Point(3.0, 5.0), Point(31.0, 5.0))
print(f"scaled: {Q.latus_arc_length() / Q.p:.15f}")

# %% Parabolic segment: 4/3 of the inscribed triangle.
seg = P.segment_area(-2.0, 2.0)
tri = P.inscribed_triangle_area(-2.0, 2.0)
print(f"segment {seg}, triangle {tri}, ratio {seg / tri}")

# %% A thin chord far out on the arm, still 4/3.
print(P.segment_area(10.0, 10.001) / P.inscribed_triangle_area(10.0, 10.001))
print("sqrt(2) + asinh(1) =", math.sqrt(2) + math.asinh(1))

"""The line tangent to both lower parabolas, and its two tangent triangles."""

import math

from parbelos import from_cusps
from parbelos import parbelos as pbl
from parbelos.euclid import triangle_angles

# %% Worked case: the slope is 2 - sqrt(3).
pb = from_cusps(0.0, 1.0, 4.0)
line, tl, tr = pbl.common_lower_tangent(pb)
print("slope", line.slope, "vs", 2 - math.sqrt(3))
print("touches", tl, tr)
print("contact discriminants", pb.lower_left.contact_discriminant(line), pb.lower_right.contact_discriminant(line))

# %% Symmetric case gives a horizontal line; the mirror flips the sign.
print(pbl.common_lower_tangent(from_cusps(0, 2, 4))[0])
print(pbl.common_lower_tangent(from_cusps(0, 3, 4))[0])

# %% Each tangent triangle has its circumcircle through its parabola's focus.
tri_l, tri_r, recs = pbl.lower_tangent_triangles(pb)
for r in recs:
    print(r.property_name, r.passed, f"{r.residual:.1e}")

# %% The two triangles are similar.
print([round(math.degrees(t), 9) for t in sorted(triangle_angles(*tri_l))])
print([round(math.degrees(t), 9) for t in sorted(triangle_angles(*tri_r))])

# %% Slope as b/a varies.
for x2 in (0.4, 1.0, 2.0, 3.0, 3.6):
    print(x2, pbl.common_lower_tangent(from_cusps(0, x2, 4))[0].slope)

"""The arbelos on the same cusps: inscribed circles trace the parbelos arcs."""

import math

from parbelos import arbelos as arb
from parbelos import from_cusps
from parbelos import parbelos as pbl
from parbelos.euclid import shoelace_area

ar = arb.from_cusps_arbelos(0.0, 1.0, 4.0)
pb = from_cusps(0.0, 1.0, 4.0)

# %% Area against the cusp-midpoints rectangle.
rect = arb.cusp_midpoints_rectangle(ar)
print("arbelos area", arb.arbelos_area(ar), "ratio", arb.arbelos_area(ar) / shoelace_area(rect), math.pi / 2)

# %% That rectangle is the parbelos tangent rectangle.
print(rect.vertices)
print(pbl.tangent_rectangle(pb).vertices)

# %% Circles inside the big semicircle, sitting on its diameter.
fam = arb.InscribedCircleFamily(ar.upper)
for u in (-1.5, -0.5, 0.0, 1.0, 1.9):
    c = arb.inscribed_circle(fam, u)
    print(f"u={u:5.2f} center {c.center}  on parabola: {pb.upper.eval(c.center.x) - c.center.y:+.1e}")

# %% Checked on a 101-point grid for all three semicircles.
for r in arb.locus_equivalence(ar, pb):
    print(r.property_name, r.passed, f"{r.residual:.1e}")

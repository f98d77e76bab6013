"""Walk through the parbelos on cusps (0, 1, 4) and check each property."""

from parbelos import from_cusps
from parbelos import parbelos as pbl
from parbelos.euclid import shoelace_area
from parbelos.suite import ALL_PROPERTIES, run_properties

pb = from_cusps(0.0, 1.0, 4.0)
print("a =", pb.a, "b =", pb.b, "vertices", pb.vertices)

# %% 1. Upper and lower boundaries have the same length.
print("lengths:", pbl.boundary_lengths(pb))

# %% 2. Split at the upper vertex; the two middle sub-arcs agree.
left, right = pbl.subdivide_similar(pb)
print("sub-parbeloses:", left.cusp_xs, right.cusp_xs)
print("middle arcs:", left.lower_right.latus_arc_length(), right.lower_left.latus_arc_length())

# %% 3. Area is 4/3 of the cusp-vertices parallelogram.
area = pbl.parbelos_area(pb)
para = shoelace_area(pbl.cusp_vertices_parallelogram(pb))
print("area", area, "parallelogram", para, "ratio", area / para)

# %% 4. ...and 2/3 of the tangent rectangle.
rect = pbl.tangent_rectangle(pb)
print("rectangle", rect.vertices, "ratio", area / shoelace_area(rect))

# %% 5. The rectangle diagonal touches the upper parabola above the middle cusp.
line, contact, disc = pbl.diagonal_contact(pb)
print("diagonal", line, "contact", contact, "discriminant", disc)

# %% 6. The rectangle's circumcircle goes through the upper focus.
circle, rec = pbl.rectangle_circumcircle(pb)
print("circle", circle, "focus", rec.witness_points["focus"], "residual", rec.residual)

# %% Everything at once, including the locus property (7).
records = run_properties(pb, ALL_PROPERTIES)
for r in records:
    print(f"[{r.group}] {'ok ' if r.passed else 'BAD'} {r.property_name:45s} residual {r.residual:.1e}")
print(sum(r.passed for r in records), "of", len(records), "passed")

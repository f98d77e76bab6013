"""Write every figure as SVG into ./figures."""

import pathlib

from parbelos.figures import FIGURE_NAMES, figure, render_scene

out = pathlib.Path("figures")
out.mkdir(exist_ok=True)

# %% Default cusps (0, 1, 4).
for name in FIGURE_NAMES:
    path = out / f"figure-{name}.svg"
    path.write_text(render_scene(figure(name, (0.0, 1.0, 4.0))), encoding="utf-8")
    print(path)

# %% Exact quadratic Bezier arcs instead of polylines.
(out / "figure-parbelos-bezier.svg").write_text(
    render_scene(figure("parbelos", (0.0, 1.0, 4.0), bezier=True)), encoding="utf-8")

# %% Symmetric case: the common tangent is horizontal and the triangles congruent.
(out / "figure-two-circumcircles-symmetric.svg").write_text(
    render_scene(figure("two-circumcircles", (0.0, 2.0, 4.0))), encoding="utf-8")

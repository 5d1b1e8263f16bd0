"""
Triangulations, edge coordinates and Dehn-Thurston coordinates
==============================================================

Three presets ship with the package.  The two genus-2 ones share their
face edge sets but glue differently, which shows up in the Thurston form
and in the number of boundary components.
"""

from skeinfaith.surface import (
    DTCoord,
    compute_thurston_form,
    count_components,
    gamma_member,
    is_triangular,
    lambda_member,
    normal_reconstruct,
    omega,
    preset,
    vertex_classes,
)

for name in ("torus", "genus2", "genus2-pants"):
    tri = preset(name)
    print(f"{name}: faces {tri.faces}, Q =", compute_thurston_form(tri).tolist())
    if not tri.torus:
        print("   boundary components:", count_components(tri, omega(tri)), "=", vertex_classes(tri))

g2 = preset("genus2")
for m in [(2, 1, 1), (1, 1, 1), (4, 1, 1)]:
    print("Lambda", m, lambda_member(g2, m))

# corner arcs per face, then back to edge coordinates
data = normal_reconstruct(g2, (3, 2, 1))
print("corners:", data.corners, "-> edges:", data.edge_coords())

for n, t in [((2, 1, 1), (5, -3, 0)), ((0, 1, 1), (2, 0, 0)), ((4, 1, 1), (0, 0, 0))]:
    c = DTCoord(n, t)
    print(c, "Gamma:", gamma_member(g2, c), "triangular:", is_triangular(g2, c))

#!/usr/bin/env python3
"""Build a Bier ball and sphere from a small multicomplex and shell it.

The running example is the cap (2,2) multicomplex M = {1, x, y, x^2, y^2}:
its Bier sphere is the boundary of the octahedron.
"""

from multibier import (
    bier_ball,
    bier_sphere,
    face_vectors,
    f_vector,
    multicomplex,
    shelling_order,
    verify_shelling,
)
from multibier.textio import render_facets

M = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)})
print("members of M:", sorted(M.members))
print("f(M) =", f_vector(M))

ball = bier_ball(M)
print("\nball facets (each drops one level of each variable):")
print(render_facets(ball))

sphere = bier_sphere(M)  # facet formula, cross-checked against boundary(ball)
print("sphere facets (the octahedron):")
print(render_facets(sphere))

fv = face_vectors(sphere)
print("f =", fv.f, " h =", fv.h, " g =", fv.g)
print("h-vector of the ball equals f(M):", face_vectors(ball).h == f_vector(M))

# A different multicomplex gives a less symmetric sphere with an explicit
# shelling: drop x^2 from M.
M2 = multicomplex((2, 2), {(0, 0), (1, 0), (0, 1), (0, 2)})
order = shelling_order(M2)
print("\nshelling of the sphere of", sorted(M2.members))
for bf in order:
    print(" ", bf)
ok, h = verify_shelling(bier_sphere(M2), [bf.vertex_set(M2.cap) for bf in order])
print("valid:", ok, " h =", tuple(h))

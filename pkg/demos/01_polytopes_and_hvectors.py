"""
Simple polytopes and their h-vectors
====================================

Polytopes are plain planar maps: a list of faces, each a cycle of vertex
ids. Nothing here uses coordinates.
"""

from smallcovers import builtin, f_vector, h_vector, parse_polytope, pogorelov_check, validate
from smallcovers.hvector import phi_polynomial

###############################################################################
# The builtin seeds validate, and their (V, E, F) satisfy Euler's relation.

for name in ["cube", "dodecahedron", "5-prism", "6-prism"]:
    p = builtin(name)
    V, E, F = f_vector(p)
    print(f"{name:13s} V={V:3d} E={E:3d} F={F:3d}  V-E+F={V - E + F}  h={h_vector(p)}")

###############################################################################
# The h-vector is the coefficient list of a polynomial in t built from the
# face counts. It works in any dimension; here is a 4-dimensional example
# (the dual f-vector of the 4-cube: 8 facets, 24 ridges, 32 edges, 16 vertices).

print("4-cube:", phi_polynomial([8, 24, 32, 16], 4).coefficients)

###############################################################################
# Polytopes can be read from text. A face listing a vertex twice, or a
# vertex missing from the numbering, is a parse error with a position.

text = """\
dim=3
face 0: 0 1 2
face 1: 0 1 3
face 2: 1 2 3
face 3: 2 0 3
"""
tetra = parse_polytope(text)
print("tetrahedron:", validate(tetra), h_vector(tetra))

###############################################################################
# Only the dodecahedron passes the right-angled realizability test.

for name in ["cube", "5-prism", "dodecahedron"]:
    rep = pogorelov_check(builtin(name))
    print(f"{name:13s} right-angled: {rep.ok}  {[v.rule for v in rep.violations][:3]}")

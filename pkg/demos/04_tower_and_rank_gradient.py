"""
Doubling towers and rank-gradient bounds
========================================

Each level doubles the previous polytope along a face. The index over the
base doubles, and the mod-2 first Betti number of a small cover of the level
polytope is V/2 - 1, a lower bound on the rank of its fundamental group.
"""

from fractions import Fraction

from smallcovers import atkinson_check, build_tower, builtin, find_orientable, rgr_ratios
from smallcovers.covers import Coloring
from smallcovers.homology import verify_dj

dodeca = builtin("dodecahedron")
tower = build_tower(dodeca, find_orientable(dodeca), "min-face", 8)
report = rgr_ratios(tower, rho=Fraction(5, 6))
print(" j index     V  b1>=   ratio")
for row in report.rows:
    print(f"{row.j:2d} {row.index:5d} {row.V:5d} {row.b1_lower:5d}  {float(row.ratio):.6f}")
print("limit:", report.limit_estimate)

###############################################################################
# The propagated coloring stays characteristic, and the homology check holds
# at the first few levels.

print([verify_dj(l.polytope, l.coloring) for l in tower.levels[:4]])

###############################################################################
# Vertex growth against the volume bound: with C/D = 5/6 every level holds
# with equality, with C/D = 1 every level fails.

print(atkinson_check(tower, Fraction(5, 6)).rho_max)
print([lvl.passes for lvl in atkinson_check(tower, 1).levels])

###############################################################################
# The cube doubles to a cube, so the bounds decay to zero.

cube = build_tower(builtin("cube"), Coloring(3, (4, 4, 1, 2, 1, 2)), "round-robin", 8)
print([str(r.ratio) for r in rgr_ratios(cube).rows], rgr_ratios(cube).limit_estimate)

"""
Mod-2 homology of a small cover
===============================

The cover is assembled as a cell complex with one cell per (face, coset)
pair; its Betti numbers over GF(2) come out equal to the h-vector.
"""

from smallcovers import Coloring, betti_mod2, build_quotient_complex, builtin, h_vector
from smallcovers.homology import euler_characteristic, top_cells_orientable

cube = builtin("cube")
t3 = Coloring(3, (4, 4, 1, 2, 1, 2))  # opposite faces share a color: the 3-torus
qc = build_quotient_complex(cube, t3)
print("cells by dimension:", qc.counts())
print("betti:", betti_mod2(qc), " h:", h_vector(cube), " chi:", euler_characteristic(qc))

###############################################################################
# Torus and Klein bottle over the square have the same mod-2 Betti numbers;
# they differ in orientability, which the complex detects from its top cells.

square = builtin("square")
for name, colors in [("torus", (1, 2, 1, 2)), ("klein", (1, 2, 3, 2))]:
    qc = build_quotient_complex(square, Coloring(2, colors))
    print(name, betti_mod2(qc), "orientable" if top_cells_orientable(qc) else "non-orientable")
